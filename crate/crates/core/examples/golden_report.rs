use salemforge::golden::{golden_cases, GoldenTable};

fn main() {
    let t = GoldenTable::reference();
    for c in golden_cases() {
        let r = c.execute(&t);
        println!("{} {} {} {:.0}ms {}", r.id, r.name, r.passed, r.elapsed_ms, r.detail);
    }
}
