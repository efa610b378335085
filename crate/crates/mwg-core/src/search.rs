//! Search oracle (in progress).
