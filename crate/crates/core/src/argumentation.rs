//! Abstract argumentation: frameworks, extension semantics, and choice-based
//! extension semantics.
//!
//! A framework is a directed attack graph over named arguments, read from the
//! APX text format (`arg(name).`/`att(a,b).` lines). Extension semantics
//! produce families of argument sets; a [`ChoiceExtensionSemantics`] equips a
//! framework with a realizable family `E_F`, a fallback `K_F ∈ E_F` and a
//! linear order on `E_F`, turning it into a choice function over the full
//! powerset of arguments: "which arguments of the queried set are selected?".

use std::collections::BTreeSet;

use thiserror::Error;

use crate::axioms::AxiomReport;
use crate::structures::{
    AlternativeSet, ChoiceFunctionTable, LinearSetOrder, RestrictedChoiceStructure, StructureError,
    Universe, MAX_UNIVERSE,
};
use crate::synthesis;

/// Frameworks larger than this are rejected by the extension enumerators.
pub const MAX_ENUMERABLE_ARGUMENTS: usize = 20;
/// Certification tabulates the choice function over the full powerset of
/// arguments and then sweeps pairs of inputs, so it gets a tighter guard.
pub const MAX_CERTIFY_ARGUMENTS: usize = 12;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ArgumentationError {
    #[error("line {line}: syntax error: {message}")]
    Syntax { line: usize, message: String },
    #[error("attack names undeclared argument `{0}`")]
    UndeclaredArgument(String),
    #[error("duplicate argument `{0}`")]
    DuplicateArgument(String),
    #[error("framework must declare at least one argument")]
    NoArguments,
    #[error("too many arguments: {0}, maximum is {1}")]
    TooLarge(usize, usize),
    #[error("semantics fallback is not a realizable set")]
    FallbackNotRealizable,
    #[error("semantics chain does not range over the realizable family")]
    ChainMismatch,
    #[error("realizable family is empty")]
    EmptyRealizable,
    #[error(transparent)]
    Structure(#[from] StructureError),
}

impl ArgumentationError {
    pub fn kind(&self) -> &'static str {
        match self {
            ArgumentationError::Syntax { .. } => "syntax_error",
            ArgumentationError::UndeclaredArgument(_) => "undeclared_argument",
            ArgumentationError::DuplicateArgument(_) => "duplicate_argument",
            ArgumentationError::NoArguments => "no_arguments",
            ArgumentationError::TooLarge(_, _) => "too_large",
            ArgumentationError::FallbackNotRealizable => "fallback_not_realizable",
            ArgumentationError::ChainMismatch => "chain_mismatch",
            ArgumentationError::EmptyRealizable => "empty_realizable",
            ArgumentationError::Structure(e) => e.kind(),
        }
    }
}

/// A directed attack graph over named arguments.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ArgumentationFramework {
    arguments: Universe,
    attacks: BTreeSet<(usize, usize)>,
}

impl ArgumentationFramework {
    pub fn new(
        arguments: Universe,
        attacks: BTreeSet<(usize, usize)>,
    ) -> Result<Self, ArgumentationError> {
        if arguments.is_empty() {
            return Err(ArgumentationError::NoArguments);
        }
        let n = arguments.len();
        if attacks.iter().any(|&(a, b)| a >= n || b >= n) {
            return Err(ArgumentationError::UndeclaredArgument("<index>".into()));
        }
        Ok(ArgumentationFramework { arguments, attacks })
    }

    pub fn arguments(&self) -> &Universe {
        &self.arguments
    }

    pub fn attacks(&self) -> &BTreeSet<(usize, usize)> {
        &self.attacks
    }

    pub fn attacks_named(&self) -> Vec<(&str, &str)> {
        self.attacks
            .iter()
            .map(|&(a, b)| (self.arguments.name(a), self.arguments.name(b)))
            .collect()
    }

    fn attacked_by(&self, set: AlternativeSet, target: usize) -> bool {
        self.attacks
            .iter()
            .any(|&(a, b)| b == target && set.contains(a))
    }

    pub fn is_conflict_free(&self, set: AlternativeSet) -> bool {
        !self
            .attacks
            .iter()
            .any(|&(a, b)| set.contains(a) && set.contains(b))
    }

    pub fn is_admissible(&self, set: AlternativeSet) -> bool {
        self.is_conflict_free(set)
            && (0..self.arguments.len()).all(|attacker| {
                let attacks_member = self
                    .attacks
                    .iter()
                    .any(|&(a, b)| a == attacker && set.contains(b));
                !attacks_member || self.attacked_by(set, attacker)
            })
    }

    pub fn is_stable(&self, set: AlternativeSet) -> bool {
        self.is_conflict_free(set)
            && (0..self.arguments.len())
                .filter(|&arg| !set.contains(arg))
                .all(|outsider| self.attacked_by(set, outsider))
    }
}

/// The extension-based semantics available as realizable-family generators.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExtensionSemantics {
    ConflictFree,
    Admissible,
    Stable,
}

/// All extensions of `af` under the given semantics, by subset enumeration.
pub fn extensions(
    af: &ArgumentationFramework,
    semantics: ExtensionSemantics,
) -> Result<BTreeSet<AlternativeSet>, ArgumentationError> {
    let n = af.arguments().len();
    if n > MAX_ENUMERABLE_ARGUMENTS {
        return Err(ArgumentationError::TooLarge(n, MAX_ENUMERABLE_ARGUMENTS));
    }
    let accepts = |set: AlternativeSet| match semantics {
        ExtensionSemantics::ConflictFree => af.is_conflict_free(set),
        ExtensionSemantics::Admissible => af.is_admissible(set),
        ExtensionSemantics::Stable => af.is_stable(set),
    };
    Ok(af.arguments().subsets().filter(|&s| accepts(s)).collect())
}

/// Parses the APX interchange format: `arg(name).` and `att(a,b).` lines,
/// blank lines, and `%` comments. Attacks may only name declared arguments.
pub fn parse_apx(text: &str) -> Result<ArgumentationFramework, ArgumentationError> {
    let mut names: Vec<String> = Vec::new();
    let mut attack_names: Vec<(String, String, usize)> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = match raw.find('%') {
            Some(pos) => raw[..pos].trim(),
            None => raw.trim(),
        };
        if line.is_empty() {
            continue;
        }
        let fact = line
            .strip_suffix('.')
            .ok_or_else(|| ArgumentationError::Syntax {
                line: line_no,
                message: "expected a fact terminated by `.`".into(),
            })?;
        let fact = fact.trim();
        if let Some(body) = fact.strip_prefix("arg(").and_then(|r| r.strip_suffix(')')) {
            let name = body.trim();
            check_name(name, line_no)?;
            if names.iter().any(|n| n == name) {
                return Err(ArgumentationError::DuplicateArgument(name.to_string()));
            }
            names.push(name.to_string());
        } else if let Some(body) = fact.strip_prefix("att(").and_then(|r| r.strip_suffix(')')) {
            let mut parts = body.split(',');
            let (a, b) = match (parts.next(), parts.next(), parts.next()) {
                (Some(a), Some(b), None) => (a.trim(), b.trim()),
                _ => {
                    return Err(ArgumentationError::Syntax {
                        line: line_no,
                        message: "expected `att(a,b).`".into(),
                    })
                }
            };
            check_name(a, line_no)?;
            check_name(b, line_no)?;
            attack_names.push((a.to_string(), b.to_string(), line_no));
        } else {
            return Err(ArgumentationError::Syntax {
                line: line_no,
                message: format!("unrecognized fact `{fact}`"),
            });
        }
    }
    if names.is_empty() {
        if let Some((a, _, _)) = attack_names.first() {
            return Err(ArgumentationError::UndeclaredArgument(a.clone()));
        }
        return Err(ArgumentationError::NoArguments);
    }
    if names.len() > MAX_UNIVERSE {
        return Err(ArgumentationError::TooLarge(names.len(), MAX_UNIVERSE));
    }
    let arguments = Universe::new(names)?;
    let mut attacks = BTreeSet::new();
    for (a, b, _line) in attack_names {
        let ai = arguments
            .position_of(&a)
            .ok_or(ArgumentationError::UndeclaredArgument(a))?;
        let bi = arguments
            .position_of(&b)
            .ok_or(ArgumentationError::UndeclaredArgument(b))?;
        attacks.insert((ai, bi));
    }
    ArgumentationFramework::new(arguments, attacks)
}

fn check_name(name: &str, line: usize) -> Result<(), ArgumentationError> {
    if name.is_empty() || !name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_') {
        return Err(ArgumentationError::Syntax {
            line,
            message: format!("invalid argument name `{name}`"),
        });
    }
    Ok(())
}

/// How the realizable family of a semantics is obtained at a framework.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RealizableSpec {
    Generated(ExtensionSemantics),
    Explicit(BTreeSet<AlternativeSet>),
}

/// A choice-based extension semantics: per framework, a realizable family, a
/// fallback inside it, and a linear order over it. The order chain is
/// optional; when omitted, the deterministic existence order (canonical
/// order with the fallback swapped to the front) is used.
///
/// Construction of the per-framework data validates structure only; whether
/// the semantics is linear (fallback-minimal) at a framework is decided by
/// [`ChoiceExtensionSemantics::lca_certify`], so non-conforming semantics can
/// be built and examined.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChoiceExtensionSemantics {
    realizable: RealizableSpec,
    fallback: AlternativeSet,
    chain: Option<Vec<AlternativeSet>>,
}

/// The semantics data resolved at one framework.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResolvedSemantics {
    pub realizable: BTreeSet<AlternativeSet>,
    pub fallback: AlternativeSet,
    pub order: LinearSetOrder,
}

impl ChoiceExtensionSemantics {
    pub fn new(
        realizable: RealizableSpec,
        fallback: AlternativeSet,
        chain: Option<Vec<AlternativeSet>>,
    ) -> Self {
        ChoiceExtensionSemantics {
            realizable,
            fallback,
            chain,
        }
    }

    pub fn fallback(&self) -> AlternativeSet {
        self.fallback
    }

    /// Materializes the family, fallback and order at `af`.
    pub fn resolve(
        &self,
        af: &ArgumentationFramework,
    ) -> Result<ResolvedSemantics, ArgumentationError> {
        let realizable: BTreeSet<AlternativeSet> = match &self.realizable {
            RealizableSpec::Generated(sem) => extensions(af, *sem)?,
            RealizableSpec::Explicit(sets) => {
                let full = af.arguments().full_set();
                if sets.iter().any(|s| !s.is_subset_of(full)) {
                    return Err(ArgumentationError::Structure(
                        StructureError::OutsideUniverse,
                    ));
                }
                sets.clone()
            }
        };
        if realizable.is_empty() {
            return Err(ArgumentationError::EmptyRealizable);
        }
        if !realizable.contains(&self.fallback) {
            return Err(ArgumentationError::FallbackNotRealizable);
        }
        let order = match &self.chain {
            Some(chain) => {
                let chain_sets: BTreeSet<AlternativeSet> = chain.iter().copied().collect();
                if chain_sets != realizable || chain_sets.len() != chain.len() {
                    return Err(ArgumentationError::ChainMismatch);
                }
                LinearSetOrder::from_chain(chain.clone())?
            }
            None => {
                let structure = RestrictedChoiceStructure::new(
                    af.arguments().clone(),
                    powerset(af),
                    realizable.iter().copied(),
                )?;
                synthesis::existence_order(&structure, self.fallback)
                    .map_err(|_| ArgumentationError::FallbackNotRealizable)?
            }
        };
        Ok(ResolvedSemantics {
            realizable,
            fallback: self.fallback,
            order,
        })
    }

    /// `Π_F(e)`: the selected subset of `e`, or the fallback.
    pub fn pi_evaluate(
        &self,
        af: &ArgumentationFramework,
        e: AlternativeSet,
    ) -> Result<AlternativeSet, ArgumentationError> {
        let resolved = self.resolve(af)?;
        Ok(resolved.order.evaluate(resolved.fallback, e))
    }

    /// Tabulates `Π_F` over the full powerset of arguments as a choice table
    /// over `⟨A, P(A), E_F⟩`.
    pub fn tabulate(
        &self,
        af: &ArgumentationFramework,
    ) -> Result<ChoiceFunctionTable, ArgumentationError> {
        let n = af.arguments().len();
        if n > MAX_CERTIFY_ARGUMENTS {
            return Err(ArgumentationError::TooLarge(n, MAX_CERTIFY_ARGUMENTS));
        }
        let resolved = self.resolve(af)?;
        let structure = RestrictedChoiceStructure::new(
            af.arguments().clone(),
            powerset(af),
            resolved.realizable.iter().copied(),
        )?;
        let map = structure
            .domain()
            .iter()
            .map(|&s| (s, resolved.order.evaluate(resolved.fallback, s)))
            .collect();
        Ok(ChoiceFunctionTable::new(structure, resolved.fallback, map)?)
    }

    /// Runs LCA1–LCA6 at `af`; the semantics is linear at `af` exactly when
    /// all six hold. Tabulates once and sweeps all six postulates.
    pub fn lca_certify(
        &self,
        af: &ArgumentationFramework,
    ) -> Result<Vec<AxiomReport>, ArgumentationError> {
        let table = self.tabulate(af)?;
        Ok((1..=6)
            .map(|i| crate::axioms::check_table_as(&table, crate::axioms::AxiomId::Lca(i)))
            .collect())
    }
}

fn powerset(af: &ArgumentationFramework) -> Vec<AlternativeSet> {
    af.arguments().subsets().collect()
}
