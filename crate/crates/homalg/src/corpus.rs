//! Built-in, parameter-instantiable example families: a four- and a
//! five-dimensional Malcev family, each with its twisting morphism, its
//! distinguished operator in Rota-Baxter and Kupershmidt form, both
//! pre-Malcev companions, and adjoint representation bundles; plus a
//! two-dimensional Hom-alternative algebra with a diagonal Rota-Baxter
//! operator for the alternative-side constructions.

use crate::algebra::{HomAlgebra, ProductTable, Products};
use crate::construct::yau_twist;
use crate::error::Error;
use crate::matrix::Matrix;
use crate::op::{rota_baxter_split, OperatorContext, SplitFlavor};
use crate::rep::{adjoint_rep, regular_bimodule, BimoduleFlavor, Representation};
use crate::scalar::Scalar;

/// One value a corpus entry produces.
#[derive(Debug, Clone)]
pub enum CorpusObject {
    /// An algebra file.
    Algebra(HomAlgebra),
    /// A representation file.
    Representation(Representation),
    /// A bimodule file.
    Bimodule(crate::rep::Bimodule),
    /// An operator file: the matrix plus the context it acts against.
    Operator {
        /// The operator matrix.
        matrix: Matrix,
        /// What it acts relative to.
        context: OperatorContext,
    },
    /// A bare linear map (matrix file), e.g. a twisting morphism.
    Map(Matrix),
}

impl CorpusObject {
    /// The file kind this object serializes to.
    #[must_use]
    pub fn kind_str(&self) -> &'static str {
        match self {
            CorpusObject::Algebra(_) => "algebra",
            CorpusObject::Representation(_) => "representation",
            CorpusObject::Bimodule(_) => "bimodule",
            CorpusObject::Operator { .. } => "operator",
            CorpusObject::Map(_) => "matrix",
        }
    }
}

/// A named rational parameter with its default literal.
#[derive(Debug, Clone, Copy)]
pub struct ParamSpec {
    /// Parameter name as accepted by `--set`.
    pub name: &'static str,
    /// Default value literal.
    pub default: &'static str,
}

/// A row of the corpus catalogue.
#[derive(Debug, Clone, Copy)]
pub struct EntryInfo {
    /// Entry name as accepted by `corpus show`.
    pub name: &'static str,
    /// The file kind the entry emits.
    pub object: &'static str,
    /// Accepted parameters with defaults.
    pub params: &'static [ParamSpec],
    /// One-line description.
    pub summary: &'static str,
}

const MALCEV4_PARAMS: &[ParamSpec] = &[
    ParamSpec {
        name: "a4",
        default: "1",
    },
    ParamSpec {
        name: "b3",
        default: "1",
    },
    ParamSpec {
        name: "l1",
        default: "0",
    },
];

const MALCEV5_PARAMS: &[ParamSpec] = &[
    ParamSpec {
        name: "a4",
        default: "0",
    },
    ParamSpec {
        name: "a5",
        default: "1",
    },
    ParamSpec {
        name: "b",
        default: "1",
    },
    ParamSpec {
        name: "l2",
        default: "0",
    },
];

const NO_PARAMS: &[ParamSpec] = &[];

const ENTRIES: &[EntryInfo] = &[
    EntryInfo {
        name: "malcev4",
        object: "algebra",
        params: MALCEV4_PARAMS,
        summary: "four-dimensional Malcev algebra, identity twist",
    },
    EntryInfo {
        name: "malcev4.alpha",
        object: "matrix",
        params: MALCEV4_PARAMS,
        summary: "involutive twisting morphism of the four-dimensional family",
    },
    EntryInfo {
        name: "malcev4.pm",
        object: "algebra",
        params: MALCEV4_PARAMS,
        summary: "pre-Malcev product x·y = [R(x), y] on the untwisted algebra",
    },
    EntryInfo {
        name: "malcev4.twisted",
        object: "algebra",
        params: MALCEV4_PARAMS,
        summary: "Hom-Malcev algebra twisted along the family morphism",
    },
    EntryInfo {
        name: "malcev4.twisted_pm",
        object: "algebra",
        params: MALCEV4_PARAMS,
        summary: "twisted pre-Malcev companion α([R(x), y])",
    },
    EntryInfo {
        name: "malcev4.rb",
        object: "operator",
        params: MALCEV4_PARAMS,
        summary: "family operator as a Rota-Baxter operator on the untwisted algebra",
    },
    EntryInfo {
        name: "malcev4.twisted_rb",
        object: "operator",
        params: MALCEV4_PARAMS,
        summary: "family operator as a Rota-Baxter operator on the twisted algebra (needs l1 = 0)",
    },
    EntryInfo {
        name: "malcev4.kuper",
        object: "operator",
        params: MALCEV4_PARAMS,
        summary: "family operator as a Kupershmidt operator on the twisted adjoint (needs l1 = 0)",
    },
    EntryInfo {
        name: "malcev4.adjoint",
        object: "representation",
        params: MALCEV4_PARAMS,
        summary: "adjoint representation of the untwisted algebra",
    },
    EntryInfo {
        name: "malcev4.twisted_adjoint",
        object: "representation",
        params: MALCEV4_PARAMS,
        summary: "adjoint representation of the twisted algebra",
    },
    EntryInfo {
        name: "malcev5",
        object: "algebra",
        params: MALCEV5_PARAMS,
        summary: "five-dimensional Malcev algebra, identity twist (needs a5 ≠ 0)",
    },
    EntryInfo {
        name: "malcev5.alpha",
        object: "matrix",
        params: MALCEV5_PARAMS,
        summary: "twisting morphism of the five-dimensional family",
    },
    EntryInfo {
        name: "malcev5.pm",
        object: "algebra",
        params: MALCEV5_PARAMS,
        summary: "pre-Malcev product x·y = [R(x), y] on the untwisted algebra",
    },
    EntryInfo {
        name: "malcev5.twisted",
        object: "algebra",
        params: MALCEV5_PARAMS,
        summary: "Hom-Malcev algebra twisted along the family morphism",
    },
    EntryInfo {
        name: "malcev5.twisted_pm",
        object: "algebra",
        params: MALCEV5_PARAMS,
        summary: "twisted pre-Malcev companion α([R(x), y])",
    },
    EntryInfo {
        name: "malcev5.rb",
        object: "operator",
        params: MALCEV5_PARAMS,
        summary: "family operator as a Rota-Baxter operator on the untwisted algebra",
    },
    EntryInfo {
        name: "malcev5.twisted_rb",
        object: "operator",
        params: MALCEV5_PARAMS,
        summary: "family operator as a Rota-Baxter operator on the twisted algebra",
    },
    EntryInfo {
        name: "malcev5.kuper",
        object: "operator",
        params: MALCEV5_PARAMS,
        summary: "family operator as a Kupershmidt operator on the twisted adjoint",
    },
    EntryInfo {
        name: "malcev5.adjoint",
        object: "representation",
        params: MALCEV5_PARAMS,
        summary: "adjoint representation of the untwisted algebra",
    },
    EntryInfo {
        name: "malcev5.twisted_adjoint",
        object: "representation",
        params: MALCEV5_PARAMS,
        summary: "adjoint representation of the twisted algebra",
    },
    EntryInfo {
        name: "malcev5.pretwist_adjoint",
        object: "representation",
        params: MALCEV5_PARAMS,
        summary: "classical adjoint actions with the twisting morphism as algebra and module twist",
    },
    EntryInfo {
        name: "nil2_hom",
        object: "algebra",
        params: NO_PARAMS,
        summary: "two-dimensional Hom-alternative algebra a∗a = b with twist diag(-1, 1)",
    },
    EntryInfo {
        name: "nil2_hom.rb",
        object: "operator",
        params: NO_PARAMS,
        summary: "diagonal Rota-Baxter operator diag(2, 1)",
    },
    EntryInfo {
        name: "nil2_hom.regular",
        object: "bimodule",
        params: NO_PARAMS,
        summary: "regular alternative bimodule of the algebra on itself",
    },
    EntryInfo {
        name: "nil2_hom.split",
        object: "algebra",
        params: NO_PARAMS,
        summary: "pre-alternative splitting induced by the Rota-Baxter operator",
    },
];

/// The corpus catalogue, in display order.
#[must_use]
pub fn entries() -> &'static [EntryInfo] {
    ENTRIES
}

/// Looks up a catalogue row by name.
fn entry_info(name: &str) -> Result<&'static EntryInfo, Error> {
    ENTRIES.iter().find(|e| e.name == name).ok_or_else(|| {
        Error::Input(format!(
            "unknown corpus entry {name:?}; run `homalg corpus list` for the catalogue"
        ))
    })
}

/// Resolves parameter overrides against an entry's spec, in spec order.
fn resolve_params(
    spec: &'static [ParamSpec],
    overrides: &[(String, Scalar)],
) -> Result<Vec<Scalar>, Error> {
    for (name, value) in overrides {
        if !spec.iter().any(|p| p.name == name) {
            let accepted: Vec<&str> = spec.iter().map(|p| p.name).collect();
            return Err(Error::Input(format!(
                "unknown parameter {name:?}; this entry accepts {accepted:?}"
            )));
        }
        if value.is_poly() {
            return Err(Error::Input(format!(
                "parameter {name:?} must be rational, got a polynomial"
            )));
        }
    }
    spec.iter()
        .map(|p| {
            overrides
                .iter()
                .rev()
                .find(|(name, _)| name == p.name)
                .map_or_else(
                    || Ok(Scalar::parse(p.default).expect("catalogue defaults parse")),
                    |(_, value)| Ok(value.clone()),
                )
        })
        .collect()
}

fn int_table(dim: usize, entries: &[(usize, usize, usize, i64)]) -> ProductTable {
    let mut t = ProductTable::zero(dim);
    for &(i, j, k, v) in entries {
        t.set(i, j, k, Scalar::int(v));
    }
    t
}

/// The four-dimensional family at resolved parameters.
struct Malcev4 {
    a4: Scalar,
    b3: Scalar,
    l1: Scalar,
}

impl Malcev4 {
    fn resolve(overrides: &[(String, Scalar)]) -> Result<Self, Error> {
        let mut values = resolve_params(MALCEV4_PARAMS, overrides)?;
        let l1 = values.pop().expect("three parameters");
        let b3 = values.pop().expect("three parameters");
        let a4 = values.pop().expect("three parameters");
        Ok(Malcev4 { a4, b3, l1 })
    }

    fn base() -> HomAlgebra {
        let table = int_table(
            4,
            &[
                (0, 1, 1, -1),
                (1, 0, 1, 1),
                (0, 2, 2, -1),
                (2, 0, 2, 1),
                (0, 3, 3, 1),
                (3, 0, 3, -1),
                (1, 2, 3, 2),
                (2, 1, 3, -2),
            ],
        );
        HomAlgebra::with_identity_twist("malcev", Products::Single(table))
            .expect("catalogue table is well-formed")
    }

    fn alpha(&self) -> Matrix {
        Matrix::from_columns(vec![
            vec![
                Scalar::one(),
                Scalar::zero(),
                Scalar::zero(),
                self.a4.clone(),
            ],
            vec![
                Scalar::zero(),
                Scalar::one(),
                self.b3.clone(),
                Scalar::zero(),
            ],
            vec![Scalar::zero(), Scalar::zero(), Scalar::int(-1), Scalar::zero()],
            vec![Scalar::zero(), Scalar::zero(), Scalar::zero(), Scalar::int(-1)],
        ])
        .expect("catalogue morphism is well-formed")
    }

    fn operator(&self) -> Result<Matrix, Error> {
        let half = self.a4.try_div(&Scalar::int(2))?;
        Ok(Matrix::from_columns(vec![
            vec![Scalar::one(), Scalar::zero(), Scalar::zero(), half],
            vec![Scalar::zero(), Scalar::zero(), self.l1.clone(), Scalar::zero()],
            vec![Scalar::zero(); 4],
            vec![Scalar::zero(); 4],
        ])
        .expect("catalogue operator is well-formed"))
    }

    fn twisted(&self) -> Result<HomAlgebra, Error> {
        yau_twist(&Self::base(), &self.alpha())
    }

    fn premalcev(&self) -> Result<HomAlgebra, Error> {
        rota_baxter_split(&self.operator()?, &Self::base(), SplitFlavor::Malcev)
    }

    fn twisted_premalcev(&self) -> Result<HomAlgebra, Error> {
        let alpha = self.alpha();
        let split = self.premalcev()?;
        let table = split.single_table("twisted pre-malcev table")?.compose_left(&alpha)?;
        HomAlgebra::new("pre_malcev", Products::Single(table), alpha)
    }

    fn require_l1_zero(&self, entry: &str) -> Result<(), Error> {
        if self.l1.is_zero() {
            Ok(())
        } else {
            Err(Error::Input(format!(
                "{entry} requires l1 = 0: no twisting morphism of the family \
                 intertwines the operator otherwise"
            )))
        }
    }
}

/// The five-dimensional family at resolved parameters.
struct Malcev5 {
    a4: Scalar,
    a5: Scalar,
    b: Scalar,
    l2: Scalar,
}

impl Malcev5 {
    fn resolve(overrides: &[(String, Scalar)]) -> Result<Self, Error> {
        let mut values = resolve_params(MALCEV5_PARAMS, overrides)?;
        let l2 = values.pop().expect("four parameters");
        let b = values.pop().expect("four parameters");
        let a5 = values.pop().expect("four parameters");
        let a4 = values.pop().expect("four parameters");
        if a5.is_zero() {
            return Err(Error::Input(
                "malcev5 requires a5 ≠ 0: the operator divides by a5".into(),
            ));
        }
        Ok(Malcev5 { a4, a5, b, l2 })
    }

    fn base() -> HomAlgebra {
        let table = int_table(
            5,
            &[(0, 3, 1, 1), (3, 0, 1, -1), (1, 4, 2, 1), (4, 1, 2, -1)],
        );
        HomAlgebra::with_identity_twist("malcev", Products::Single(table))
            .expect("catalogue table is well-formed")
    }

    fn alpha(&self) -> Result<Matrix, Error> {
        let mut m = Matrix::identity(5);
        let ratio = self.a4.mul(&self.l2).neg().try_div(&self.a5)?;
        m.set(2, 3, self.l2.clone());
        m.set(2, 4, ratio);
        Ok(m)
    }

    fn operator(&self) -> Result<Matrix, Error> {
        let ratio = self.b.neg().try_div(&self.a5)?;
        Ok(Matrix::from_columns(vec![
            vec![
                Scalar::one(),
                Scalar::zero(),
                Scalar::zero(),
                self.a4.clone(),
                self.a5.clone(),
            ],
            vec![
                Scalar::zero(),
                Scalar::zero(),
                self.b.clone(),
                Scalar::zero(),
                Scalar::zero(),
            ],
            vec![Scalar::zero(); 5],
            vec![Scalar::zero(), ratio, Scalar::zero(), Scalar::zero(), Scalar::zero()],
            vec![Scalar::zero(); 5],
        ])
        .expect("catalogue operator is well-formed"))
    }

    fn twisted(&self) -> Result<HomAlgebra, Error> {
        yau_twist(&Self::base(), &self.alpha()?)
    }

    fn premalcev(&self) -> Result<HomAlgebra, Error> {
        rota_baxter_split(&self.operator()?, &Self::base(), SplitFlavor::Malcev)
    }

    fn twisted_premalcev(&self) -> Result<HomAlgebra, Error> {
        let alpha = self.alpha()?;
        let split = self.premalcev()?;
        let table = split.single_table("twisted pre-malcev table")?.compose_left(&alpha)?;
        HomAlgebra::new("pre_malcev", Products::Single(table), alpha)
    }

    /// The classical adjoint actions paired with the twisting morphism in
    /// both twist slots.
    fn pretwist_adjoint(&self) -> Result<Representation, Error> {
        let alpha = self.alpha()?;
        let base = Self::base();
        let table = base.single_table("pretwist adjoint")?.clone();
        let carrier = HomAlgebra::new("malcev", Products::Single(table), alpha)?;
        adjoint_rep(&carrier)
    }
}

fn nil2_base() -> HomAlgebra {
    let table = int_table(2, &[(0, 0, 1, 1)]);
    let mut alpha = Matrix::identity(2);
    alpha.set(0, 0, Scalar::int(-1));
    HomAlgebra::new("alternative", Products::Single(table), alpha)
        .expect("catalogue table is well-formed")
}

fn nil2_operator() -> Matrix {
    let mut m = Matrix::identity(2);
    m.set(0, 0, Scalar::int(2));
    m
}

/// Instantiates a corpus entry at the given parameter overrides.
///
/// # Errors
/// Unknown entry or parameter name; polynomial parameter values;
/// constraint violations (`a5 = 0` anywhere in the five-dimensional
/// family; `l1 ≠ 0` for the four-dimensional twisted operator entries).
pub fn load_example(name: &str, overrides: &[(String, Scalar)]) -> Result<CorpusObject, Error> {
    entry_info(name)?;
    match name {
        "malcev4" => {
            Malcev4::resolve(overrides)?;
            Ok(CorpusObject::Algebra(Malcev4::base()))
        }
        "malcev4.alpha" => Ok(CorpusObject::Map(Malcev4::resolve(overrides)?.alpha())),
        "malcev4.pm" => Ok(CorpusObject::Algebra(
            Malcev4::resolve(overrides)?.premalcev()?,
        )),
        "malcev4.twisted" => Ok(CorpusObject::Algebra(
            Malcev4::resolve(overrides)?.twisted()?,
        )),
        "malcev4.twisted_pm" => Ok(CorpusObject::Algebra(
            Malcev4::resolve(overrides)?.twisted_premalcev()?,
        )),
        "malcev4.rb" => {
            let family = Malcev4::resolve(overrides)?;
            Ok(CorpusObject::Operator {
                matrix: family.operator()?,
                context: OperatorContext::Algebra(Malcev4::base()),
            })
        }
        "malcev4.twisted_rb" => {
            let family = Malcev4::resolve(overrides)?;
            family.require_l1_zero("malcev4.twisted_rb")?;
            Ok(CorpusObject::Operator {
                matrix: family.operator()?,
                context: OperatorContext::Algebra(family.twisted()?),
            })
        }
        "malcev4.kuper" => {
            let family = Malcev4::resolve(overrides)?;
            family.require_l1_zero("malcev4.kuper")?;
            Ok(CorpusObject::Operator {
                matrix: family.operator()?,
                context: OperatorContext::Representation(adjoint_rep(&family.twisted()?)?),
            })
        }
        "malcev4.adjoint" => {
            Malcev4::resolve(overrides)?;
            Ok(CorpusObject::Representation(adjoint_rep(&Malcev4::base())?))
        }
        "malcev4.twisted_adjoint" => Ok(CorpusObject::Representation(adjoint_rep(
            &Malcev4::resolve(overrides)?.twisted()?,
        )?)),
        "malcev5" => {
            Malcev5::resolve(overrides)?;
            Ok(CorpusObject::Algebra(Malcev5::base()))
        }
        "malcev5.alpha" => Ok(CorpusObject::Map(Malcev5::resolve(overrides)?.alpha()?)),
        "malcev5.pm" => Ok(CorpusObject::Algebra(
            Malcev5::resolve(overrides)?.premalcev()?,
        )),
        "malcev5.twisted" => Ok(CorpusObject::Algebra(
            Malcev5::resolve(overrides)?.twisted()?,
        )),
        "malcev5.twisted_pm" => Ok(CorpusObject::Algebra(
            Malcev5::resolve(overrides)?.twisted_premalcev()?,
        )),
        "malcev5.rb" => {
            let family = Malcev5::resolve(overrides)?;
            Ok(CorpusObject::Operator {
                matrix: family.operator()?,
                context: OperatorContext::Algebra(Malcev5::base()),
            })
        }
        "malcev5.twisted_rb" => {
            let family = Malcev5::resolve(overrides)?;
            Ok(CorpusObject::Operator {
                matrix: family.operator()?,
                context: OperatorContext::Algebra(family.twisted()?),
            })
        }
        "malcev5.kuper" => {
            let family = Malcev5::resolve(overrides)?;
            Ok(CorpusObject::Operator {
                matrix: family.operator()?,
                context: OperatorContext::Representation(adjoint_rep(&family.twisted()?)?),
            })
        }
        "malcev5.adjoint" => {
            Malcev5::resolve(overrides)?;
            Ok(CorpusObject::Representation(adjoint_rep(&Malcev5::base())?))
        }
        "malcev5.twisted_adjoint" => Ok(CorpusObject::Representation(adjoint_rep(
            &Malcev5::resolve(overrides)?.twisted()?,
        )?)),
        "malcev5.pretwist_adjoint" => Ok(CorpusObject::Representation(
            Malcev5::resolve(overrides)?.pretwist_adjoint()?,
        )),
        "nil2_hom" => {
            resolve_params(NO_PARAMS, overrides)?;
            Ok(CorpusObject::Algebra(nil2_base()))
        }
        "nil2_hom.rb" => {
            resolve_params(NO_PARAMS, overrides)?;
            Ok(CorpusObject::Operator {
                matrix: nil2_operator(),
                context: OperatorContext::Algebra(nil2_base()),
            })
        }
        "nil2_hom.regular" => {
            resolve_params(NO_PARAMS, overrides)?;
            Ok(CorpusObject::Bimodule(regular_bimodule(
                &nil2_base(),
                BimoduleFlavor::Alternative,
            )?))
        }
        "nil2_hom.split" => {
            resolve_params(NO_PARAMS, overrides)?;
            Ok(CorpusObject::Algebra(rota_baxter_split(
                &nil2_operator(),
                &nil2_base(),
                SplitFlavor::Alternative,
            )?))
        }
        _ => unreachable!("entry_info vetted the name"),
    }
}
