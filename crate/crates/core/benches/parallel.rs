use criterion::{criterion_group, criterion_main, Criterion};
use monoid_core::monoid::build_monoid;
use monoid_core::mvpoly::parse_hpoly;
use monoid_core::par::Execution;
use monoid_core::quartic::quartic_reports;
use monoid_core::sample::sample_surface_with;

fn parse(s: &str) -> monoid_core::mvpoly::HPoly {
    parse_hpoly(s, &["x1", "x2", "x3"]).unwrap()
}

fn modes() -> Vec<(&'static str, Execution)> {
    let mut v = vec![("sequential", Execution::Sequential)];
    if cfg!(feature = "parallel") {
        v.push(("parallel", Execution::Parallel));
    }
    v
}

fn sampling(c: &mut Criterion) {
    let m = build_monoid(&parse("x1^3 + x2^3 + 5*x1*x2*x3"), &parse("-x3^3*(x1 + x2)")).unwrap();
    let mut group = c.benchmark_group("sample_100x100");
    for (name, exec) in modes() {
        group.bench_function(name, |b| b.iter(|| sample_surface_with(&m, 100, 2, exec).unwrap()));
    }
    group.finish();
}

fn classification(c: &mut Criterion) {
    let inputs: Vec<_> = [
        ("x1^3 + x2^3 + 5*x1*x2*x3", "-x3^3*(x1 + x2)"),
        ("x1*x2^2 + x3^3", "x1^4"),
        ("x1*x2*x3", "x1^4 + x2^4 + x3^4 + x1*x2*x3*(x1 + x2 + x3)"),
        ("x1^3 + x2^3 + x3^3", "x1^4 - 2*x2^4 + 3*x3^4 + x1*x2*x3^2"),
    ]
    .iter()
    .map(|(a, b)| (parse(a), parse(b)))
    .collect();
    let mut group = c.benchmark_group("classify_4_quartics");
    group.sample_size(10);
    for (name, exec) in modes() {
        group.bench_function(name, |b| b.iter(|| quartic_reports(&inputs, 7, exec)));
    }
    group.finish();
}

criterion_group!(benches, sampling, classification);
criterion_main!(benches);
