//! Check hand-written certificates, including one that is rejected.

use opn_bounds::cli::render::{render_check, render_violations};
use opn_bounds::lp::{build_system, check_certificate, table2_adjusted, table2_printed, table3_printed, Certificate};
use opn_bounds::Error;

fn report(name: &str, cert: &Certificate) {
    println!("== {name}");
    match check_certificate(&build_system(cert.variant), cert) {
        Ok(r) => print!("{}", render_check(&r)),
        Err(Error::InvalidCertificate(v)) => print!("{}", render_violations(&v)),
        Err(e) => println!("error: {e}"),
    }
}

fn main() {
    report("Table 2 as printed", &table2_printed());
    report("Table 2 with c10 = 0", &table2_adjusted());
    report("Table 3 as printed", &table3_printed());

    let json = r#"{"variant": "standard", "multipliers": {"5.1": "1", "5.2": "5/2"}}"#;
    match Certificate::from_json(json) {
        Ok(cert) => report("ad hoc JSON", &cert),
        Err(e) => println!("parse error: {e}"),
    }
}
