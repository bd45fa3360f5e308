#![allow(dead_code)]

pub mod bessel_reference;
pub mod oracle;
