use qclrc::codes::DistanceBudget;
use qclrc::examples::{reproduce, EXAMPLES};

#[test]
fn every_example_reproduces() {
    for ex in &EXAMPLES {
        let r = reproduce(ex.id, &DistanceBudget::default()).unwrap();
        for c in &r.checks {
            println!(
                "{} {}: expected {} got {}",
                ex.id, c.name, c.expected, c.actual
            );
        }
        if let Some(s) = &r.scan {
            println!("{:?}", s.truncated);
        }
        assert!(r.passed(), "{}: {:?}", ex.id, r.failures());
    }
}
