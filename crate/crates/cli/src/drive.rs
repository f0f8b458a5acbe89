//! Sharded, order-preserving parallel versions of the core drivers.
//!
//! Work is split by [`EnumSpec::shards`]; rayon's indexed collect keeps
//! shard order, so every result equals the serial one.

use std::time::Instant;

use rayon::prelude::*;
use revtour_core::enumeration::{census_entry, Census, EnumSpec};
use revtour_core::theorems::{check_instance, instance_spec, TheoremId, VerificationReport};
use revtour_core::PairFamily;

use crate::CliError;

/// Runs `f` on a pool of `jobs` threads (0 = rayon's default).
pub fn with_jobs<T: Send>(jobs: usize, f: impl FnOnce() -> T + Send) -> Result<T, CliError> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| CliError::input(format!("cannot start {jobs} worker threads: {e}")))?;
    Ok(pool.install(f))
}

/// Maps `f` over every family of `spec`, shard by shard, in enumeration
/// order.
pub fn map_families<T, F>(spec: &EnumSpec, f: F) -> Result<Vec<T>, CliError>
where
    T: Send,
    F: Fn(PairFamily) -> Result<Option<T>, CliError> + Sync,
{
    let shards = spec.shards()?;
    let parts: Vec<Vec<T>> = shards
        .into_par_iter()
        .map(|shard| {
            let mut out = Vec::new();
            for fam in spec.shard_families(shard)? {
                if let Some(x) = f(fam)? {
                    out.push(x);
                }
            }
            Ok(out)
        })
        .collect::<Result<_, CliError>>()?;
    Ok(parts.into_iter().flatten().collect())
}

/// The families of `spec` that pass its filter.
pub fn enumerate(spec: &EnumSpec) -> Result<Vec<PairFamily>, CliError> {
    map_families(spec, |f| Ok(spec.accepts(&f).then_some(f)))
}

pub fn census(spec: &EnumSpec) -> Result<Census, CliError> {
    let n = spec.n;
    let hits = map_families(spec, |f| Ok(census_entry(n, f)))?;
    let mut census = Census::default();
    for (entry, form) in hits {
        census.push(entry, form);
    }
    Ok(census)
}

pub fn verify_range(
    theorem: TheoremId,
    n_min: usize,
    n_max: usize,
    max_n: Option<usize>,
) -> Result<VerificationReport, CliError> {
    let start = Instant::now();
    for n in n_min..=n_max {
        instance_spec(theorem, n, max_n).check()?;
    }
    let mut report = VerificationReport::new(theorem, (n_min, n_max));
    for n in n_min..=n_max {
        let spec = instance_spec(theorem, n, max_n);
        for inst in map_families(&spec, |f| Ok(Some(check_instance(theorem, n, &f)?)))? {
            report.add(inst);
        }
    }
    report.elapsed_ms = start.elapsed().as_millis() as u64;
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use revtour_core::enumeration::{indecomposable_census, EnumFilter, EnumKind};

    #[test]
    fn parallel_matches_serial() {
        for jobs in [1, 3] {
            let spec = EnumSpec::new(7, EnumKind::PartialQuasi).filter(EnumFilter::IrreducibleOnly);
            let par = with_jobs(jobs, || enumerate(&spec)).unwrap().unwrap();
            let ser: Vec<_> = spec.families().unwrap().filter(|f| spec.accepts(f)).collect();
            assert_eq!(par, ser);

            let spec = EnumSpec::new(6, EnumKind::PartialQuasi);
            let par = with_jobs(jobs, || census(&spec)).unwrap().unwrap();
            assert_eq!(par, indecomposable_census(&spec).unwrap());

            let mut par = with_jobs(jobs, || verify_range(TheoremId::Theorem2, 5, 6, None)).unwrap().unwrap();
            let ser = revtour_core::theorems::verify_range(TheoremId::Theorem2, 5, 6).unwrap();
            par.elapsed_ms = 0;
            assert_eq!(par, ser);
        }
    }

    #[test]
    fn guards_checked_before_work() {
        assert!(verify_range(TheoremId::Theorem1, 5, 13, None).is_err());
    }
}
