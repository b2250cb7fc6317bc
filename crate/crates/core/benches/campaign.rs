use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use prismcolor::campaign::{verify_equitable, CampaignConfig, Mode};

fn config(jobs: usize) -> CampaignConfig {
    CampaignConfig {
        ns: vec![6, 7],
        mode: Mode::Sample,
        samples: 500,
        universe: 6,
        seed: 3,
        jobs,
        ..CampaignConfig::default()
    }
}

fn sampling(c: &mut Criterion) {
    let threads = std::thread::available_parallelism().map_or(1, |n| n.get());
    let mut g = c.benchmark_group("equitable-sample");
    g.sample_size(10);
    for (label, jobs) in [("sequential", 1), ("parallel", threads.max(2))] {
        g.bench_with_input(BenchmarkId::new(label, jobs), &jobs, |b, &jobs| {
            b.iter(|| {
                let reports = verify_equitable(&config(jobs)).unwrap();
                assert!(reports.iter().all(|r| r.passed()));
            })
        });
    }
    g.finish();
}

criterion_group!(benches, sampling);
criterion_main!(benches);
