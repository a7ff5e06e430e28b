//! Finite-group characters and the (level, kernel, orbit) data of traces on
//! elementary groups.

pub mod ball;
pub mod dixon;
pub mod group;
pub mod json;
pub mod subquotient;
pub mod triple;

pub use dixon::{character_table, CharacterTable, ClassFunction};
pub use group::{FiniteGroup, GElem, GROUP_CAP};
pub use ball::{sample_ball, word_ball, IntMat, BALL_CAP, ENTRY_BOUND};
pub use subquotient::{subquotient_a, Subquotient, ORBIT_CAP};
pub use triple::{
    central_sample, resolve, round_trip, trace_checks, triple_model, validate_triple, CharacterTriple, ClassValues,
    InducedTrace, RoundTrip, TraceReport, TripleReport,
};
pub use json::{ClassValueJson, TripleJson};
