//! Constructions (in progress).
