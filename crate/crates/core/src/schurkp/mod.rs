//! Symmetric functions and tau-function checks (stub).
