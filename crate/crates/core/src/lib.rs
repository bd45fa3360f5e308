pub mod bessel_bases;
pub mod cli;
pub mod expansions;
pub mod prolate_core;
pub mod quadrature;
pub mod specfun;
pub mod tail;
pub mod transforms;
