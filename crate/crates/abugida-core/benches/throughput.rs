//! Batch throughput: sequential versus rayon-parallel paths over the same
//! inputs, plus single-word micro-benchmarks.
//!
//! Run with `cargo bench -p abugida-core`; drop the default features
//! (`--no-default-features`) to measure the sequential-only build.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion, Throughput};

use abugida_core::corpus;
use abugida_core::normalize::{normalize_word, NormalizerOptions};
use abugida_core::parse::parse_word;
use abugida_core::script::bundled_spec;
use abugida_core::synth;

fn bench_normalize_batch(c: &mut Criterion) {
    let spec = bundled_spec("bn").unwrap();
    let options = NormalizerOptions::for_script(spec);
    let mut group = c.benchmark_group("normalize_batch");
    for &size in &[1_000usize, 10_000] {
        let words = synth::raw_words(spec, size, 0x11, 0.05);
        group.throughput(Throughput::Elements(size as u64));
        group.bench_with_input(BenchmarkId::new("seq", size), &words, |b, words| {
            b.iter(|| corpus::normalize_batch_seq(spec, words, &options));
        });
        #[cfg(feature = "parallel")]
        group.bench_with_input(BenchmarkId::new("rayon", size), &words, |b, words| {
            b.iter(|| corpus::normalize_batch(spec, words, &options));
        });
    }
    group.finish();
}

fn bench_parse_batch(c: &mut Criterion) {
    let spec = bundled_spec("bn").unwrap();
    let mut group = c.benchmark_group("parse_batch");
    for &size in &[1_000usize, 10_000] {
        let words = synth::normalized_words(spec, size, 0x22);
        group.throughput(Throughput::Elements(size as u64));
        group.bench_with_input(BenchmarkId::new("seq", size), &words, |b, words| {
            b.iter(|| corpus::parse_batch_seq(spec, words));
        });
        #[cfg(feature = "parallel")]
        group.bench_with_input(BenchmarkId::new("rayon", size), &words, |b, words| {
            b.iter(|| corpus::parse_batch(spec, words));
        });
    }
    group.finish();
}

fn bench_single_word(c: &mut Criterion) {
    let spec = bundled_spec("bn").unwrap();
    let options = NormalizerOptions::for_script(spec);
    let clean = "সংস\u{09CD}ক\u{09C3}ত\u{09BF}";
    let noisy = "চ\u{09C1}\u{09CD}ক\u{09CD}ত\u{09BF}\u{200B}";
    c.bench_function("parse_word", |b| {
        b.iter(|| parse_word(spec, std::hint::black_box(clean)).unwrap());
    });
    c.bench_function("normalize_word/clean", |b| {
        b.iter(|| normalize_word(spec, std::hint::black_box(clean), &options).unwrap());
    });
    c.bench_function("normalize_word/noisy", |b| {
        b.iter(|| normalize_word(spec, std::hint::black_box(noisy), &options).unwrap());
    });
}

criterion_group!(
    benches,
    bench_normalize_batch,
    bench_parse_batch,
    bench_single_word
);
criterion_main!(benches);
