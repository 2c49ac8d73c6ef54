//! Finite windows of ind-seeds from directed systems (stub).
