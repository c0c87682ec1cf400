//! Scalar backends.
