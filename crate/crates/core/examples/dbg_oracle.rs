use quatpoly::*;
use quatpoly::oracle::{numeric_roots, OracleConfig};

fn main() {
    let qi = Quat64::unit_i();
    let qj = Quat64::unit_j();
    let qk = Quat64::unit_k();
    let f = StdPoly::from_coeffs(vec![
        qi - qj,
        Quat64::from_real(2.0) + qk,
        Quat64::zero(),
        Quat64::one(),
    ]);
    let cfg = OracleConfig { starts: 256, seed: 1, ..OracleConfig::default() };
    let roots = numeric_roots(&f, &cfg).unwrap();
    println!("isolated ({}):", roots.isolated.len());
    for z in &roots.isolated {
        println!("  {z}   residual {:.3e}", verify_root(&f, *z));
    }
    println!("spheres ({}):", roots.spheres.len());
    for s in &roots.spheres {
        println!("  re={} nu={}", s.re, s.imag_norm);
    }
}
