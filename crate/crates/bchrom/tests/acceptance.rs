//! One line per acceptance criterion; exits non-zero if any fails.

use bchrom::selftest;

fn main() {
    let mut failed = 0;
    for id in 1..=selftest::SUITES.len() {
        let r = selftest::run(id);
        println!("{r}");
        failed += usize::from(!r.passed);
    }
    println!("acceptance: {} passed, {failed} failed", selftest::SUITES.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
