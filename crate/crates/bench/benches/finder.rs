use criterion::{criterion_group, criterion_main, Criterion};
use pfactor::find_parity_factor;
use pfactor::generate::Probability;
use pfactor::matching::maximum_matching;
use pfactor::reduction::{build_gadget, clamp_spec};
use pfactor_bench::gnp_instances;

fn finder(c: &mut Criterion) {
    let mut group = c.benchmark_group("find_parity_factor");
    group.sample_size(20);
    for (num, den) in [(1, 2), (9, 10)] {
        let p = Probability::new(num, den).unwrap();
        let cases = gnp_instances(56, p, 2, 4, 4);
        group.bench_function(format!("n56_a2_b4_p{num}_{den}"), |b| {
            b.iter(|| {
                for (g, spec) in &cases {
                    assert!(find_parity_factor(g, spec, false, 0).unwrap().has_factor());
                }
            })
        });
        let cases = gnp_instances(16, p, 2, 2, 16);
        group.bench_function(format!("n16_a2_b2_p{num}_{den}"), |b| {
            b.iter(|| {
                for (g, spec) in &cases {
                    let _ = find_parity_factor(g, spec, false, 0).unwrap();
                }
            })
        });
    }
    group.finish();
}

fn gadget_matching(c: &mut Criterion) {
    let p = Probability::new(3, 4).unwrap();
    let gadgets: Vec<_> = gnp_instances(56, p, 2, 4, 2)
        .iter()
        .map(|(g, spec)| build_gadget(g, &clamp_spec(g, spec).unwrap()).unwrap())
        .collect();
    c.bench_function("maximum_matching_gadget_n56", |b| {
        b.iter(|| {
            for gg in &gadgets {
                maximum_matching(&gg.gadget);
            }
        })
    });
}

criterion_group!(benches, finder, gadget_matching);
criterion_main!(benches);
