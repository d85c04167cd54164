//! Recognition and two-tree factorization of partial double trees: graphs
//! that embed isometrically into the Cartesian product of two trees.
//!
//! The main entry points are [`recognition::recognize`] (linear time, with a
//! checkable certificate either way), [`factorization::embed`] and
//! [`oracle::DistanceOracle`]. [`polygon`] builds grid networks of simple
//! rectilinear polygons, and [`reference`] holds slow definitional checks.

pub mod factorization;
pub mod generators;
pub mod graph;
pub mod oracle;
pub mod polygon;
pub mod recognition;
pub mod reference;
