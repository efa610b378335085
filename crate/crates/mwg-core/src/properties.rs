//! Property checkers (in progress).
