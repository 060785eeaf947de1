//! Finite restricted choice structures and their linear-order representations.
//!
//! A restricted choice structure is a triple `⟨A, S, E⟩` of a finite set of
//! alternatives, a family of input sets `S` over `A`, and a non-empty family
//! `E ⊆ S` of realizable outputs. A choice function maps every input to a
//! realizable subset of it whenever one exists; a designated fallback set `K`
//! is returned when none does. This crate provides:
//!
//! - [`relations`]: finite binary-relation algebra over indexed carriers of
//!   sets (property predicates, transitive closure, minima, consistent
//!   extension to a total preorder, strict-part-preserving linearization);
//! - [`structures`]: alternative sets, restricted choice structures, linear
//!   set orders with minimum-encoded fallback, and extensional choice tables;
//! - [`axioms`]: decision procedures for the SS, LCR and LCA postulate
//!   families, each reporting a concrete counterexample witness on violation;
//! - [`synthesis`]: the constructive representation pipeline that recovers a
//!   witnessing fallback-minimal linear order from any postulate-satisfying
//!   choice table, plus the existence construction for arbitrary structures;
//! - [`oracle`]: brute-force ground truth at desk scale (order and table
//!   enumeration, representability by exhaustion);
//! - [`change`]: choice-based theory change operators and their LCR
//!   certification;
//! - [`argumentation`]: abstract argumentation frameworks (APX input),
//!   extension semantics, and choice-based extension semantics with LCA
//!   certification;
//! - [`json`]: the canonical JSON encodings used by the command-line tools.
//!
//! # Example
//!
//! A shop sells tea, milk and sugar, but milk only together with tea. Ranking
//! the purchasable bundles with the full bundle as fallback induces a choice
//! function, and the choice table alone is enough to reconstruct a witnessing
//! order:
//!
//! ```
//! use restricted_choice::structures::table_from_order;
//! use restricted_choice::synthesis;
//! use restricted_choice::{LinearSetOrder, RestrictedChoiceStructure, Universe};
//!
//! # fn main() -> Result<(), Box<dyn std::error::Error>> {
//! let universe = Universe::new(["tea", "milk", "sugar"])?;
//! let bundle = |names: &[&str]| universe.set_of(names.iter().copied());
//! let realizable = vec![
//!     bundle(&["tea"])?,
//!     bundle(&["sugar"])?,
//!     bundle(&["tea", "milk"])?,
//!     bundle(&["tea", "milk", "sugar"])?,
//! ];
//! let structure = RestrictedChoiceStructure::new(
//!     universe.clone(),
//!     universe.subsets(), // any subset may be asked for
//!     realizable.clone(),
//! )?;
//!
//! let fallback = bundle(&["tea", "milk", "sugar"])?;
//! let order = LinearSetOrder::from_chain(vec![
//!     fallback,
//!     bundle(&["tea", "milk"])?,
//!     bundle(&["sugar"])?,
//!     bundle(&["tea"])?,
//! ])?;
//!
//! // asking for tea and sugar yields the preferred purchasable subset
//! assert_eq!(order.evaluate(fallback, bundle(&["tea", "sugar"])?), bundle(&["sugar"])?);
//! // milk alone is not purchasable, so the fallback is returned
//! assert_eq!(order.evaluate(fallback, bundle(&["milk"])?), fallback);
//!
//! // the extensional table determines the order up to induced values
//! let table = table_from_order(&order, fallback, &structure)?;
//! let trace = synthesis::synthesize(&table)?;
//! assert!(trace.final_order.is_k_minimal(fallback));
//! assert_eq!(table_from_order(&trace.final_order, fallback, &structure)?, table);
//! # Ok(())
//! # }
//! ```

pub mod argumentation;
pub mod axioms;
pub mod change;
pub mod json;
pub mod oracle;
pub mod relations;
pub mod structures;
pub mod synthesis;

pub use axioms::{AxiomId, AxiomReport};
pub use relations::{Carrier, PropertyName, Relation, RelationError};
pub use structures::{
    AlternativeSet, ChoiceFunctionTable, LinearSetOrder, RestrictedChoiceStructure, StructureError,
    Universe,
};
pub use synthesis::{SynthesisError, SynthesisTrace};
