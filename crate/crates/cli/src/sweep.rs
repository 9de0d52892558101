//! Conic-driven sweeps behind `solve5` and `hunt`.
//!
//! The scan range is partitioned into contiguous chunks across worker
//! threads and the per-chunk results are concatenated in chunk order, so
//! output is identical for every thread count.

use num_traits::Zero;

use nonfree::conic::{
    base_point, classify_alpha, conic_for_slot, orbit_extend, rational_roots5, scan_conic_range,
    AlphaClass, ConicPoint, ConicSpec,
};
use nonfree::halfrel::certify_half_relation;
use nonfree::rat::Int;
use nonfree::Result;

use crate::records::{FoundRecord, Target};

/// Points with |x| <= bound, scanned across `threads` workers, plus the
/// orbit extension; equals `conic_points` for every thread count.
pub fn points_threaded(
    c: &ConicSpec,
    x_abs_bound: u64,
    orbit_steps: u32,
    threads: usize,
) -> Vec<ConicPoint> {
    let threads = threads.max(1);
    let lo = -(x_abs_bound as i128);
    let hi = x_abs_bound as i128;
    let total = (hi - lo + 1) as usize;
    let chunk = total.div_ceil(threads);
    let mut pts: Vec<ConicPoint> = Vec::new();
    std::thread::scope(|scope| {
        let mut handles = Vec::new();
        let mut start = lo;
        while start <= hi {
            let end = (start + chunk as i128 - 1).min(hi);
            let conic = c.clone();
            handles.push(
                scope.spawn(move || scan_conic_range(&conic, &Int::from(start), &Int::from(end))),
            );
            start = end + 1;
        }
        for h in handles {
            pts.extend(h.join().expect("scan worker panicked"));
        }
    });
    if classify_alpha(c) == AlphaClass::PositiveNonsquare && orbit_steps > 0 {
        let mut seeds = pts.clone();
        if let Some(bp) = base_point(c) {
            seeds.push(bp);
        }
        pts.extend(orbit_extend(c, &seeds, orbit_steps));
    }
    pts.sort_by(|a, b| a.x.cmp(&b.x));
    pts.dedup_by(|a, b| a.x == b.x);
    pts
}

/// Every verified record arising from the given conic points: for each
/// nonzero x, each nonzero rational root of the completed tuple gets a
/// certificate. Records are ordered by (x, q).
pub fn records_for_points(
    c: &ConicSpec,
    pts: &[ConicPoint],
    target: Option<&Target>,
) -> Result<Vec<FoundRecord>> {
    let mut out = Vec::new();
    for p in pts {
        if p.x.is_zero() {
            continue;
        }
        let tuple = c.tuple_with(&p.x)?;
        let mut roots = rational_roots5(&tuple)?;
        roots.sort();
        for q in roots {
            if q.is_zero() {
                continue;
            }
            let cert = certify_half_relation(&tuple, &q)?;
            debug_assert!(cert.is_fully_verified());
            let delta = c.delta_at(&p.x);
            out.push(FoundRecord::new(cert, delta, target));
        }
    }
    Ok(out)
}

/// The full solve5 pipeline for one conic.
pub fn solve_slot(
    fixed: [Int; 4],
    slot: usize,
    x_abs_bound: u64,
    orbit_steps: u32,
    threads: usize,
    target: Option<&Target>,
) -> Result<(ConicSpec, Vec<FoundRecord>)> {
    let c = conic_for_slot(fixed, slot)?;
    let pts = points_threaded(&c, x_abs_bound, orbit_steps, threads);
    let records = records_for_points(&c, &pts, target)?;
    Ok((c, records))
}

/// Inclusive integer range for one fixed slot of a hunt job; iteration
/// skips zero.
#[derive(Clone, Debug)]
pub struct SlotRange {
    pub lo: i64,
    pub hi: i64,
}

impl SlotRange {
    pub fn parse(s: &str) -> Result<SlotRange> {
        let bad = || nonfree::Error::BadParams(format!("expected LO..HI, got \"{s}\""));
        let (lo, hi) = s.split_once("..").ok_or_else(bad)?;
        let lo: i64 = lo.parse().map_err(|_| bad())?;
        let hi: i64 = hi.parse().map_err(|_| bad())?;
        if hi < lo {
            return Err(nonfree::Error::BadParams(format!("empty range \"{s}\"")));
        }
        if lo == 0 && hi == 0 {
            return Err(nonfree::Error::BadParams(
                "range contains only 0".to_string(),
            ));
        }
        Ok(SlotRange { lo, hi })
    }

    fn values(&self) -> impl Iterator<Item = i64> + '_ {
        (self.lo..=self.hi).filter(|&v| v != 0)
    }
}

/// Accumulation-search job: four fixed-slot ranges, the conic variable
/// slot, scan/orbit bounds, and a target to rank distances against.
#[derive(Clone, Debug)]
pub struct HuntJob {
    pub ranges: [SlotRange; 4],
    pub slot: usize,
    pub x_abs_bound: u64,
    pub orbit_steps: u32,
    pub threads: usize,
    pub target: Target,
}

/// Sweep every combination of fixed entries, solve each conic, and rank
/// all verified records by distance to the target (ties broken by q,
/// then tuple). Deterministic for a fixed job regardless of threads.
pub fn hunt(job: &HuntJob) -> Result<Vec<FoundRecord>> {
    let combos: Vec<[Int; 4]> = job.ranges[0]
        .values()
        .flat_map(|a| {
            let job = &job;
            job.ranges[1].values().flat_map(move |b| {
                job.ranges[2].values().flat_map(move |c| {
                    job.ranges[3]
                        .values()
                        .map(move |d| [Int::from(a), Int::from(b), Int::from(c), Int::from(d)])
                })
            })
        })
        .collect();

    let threads = job.threads.max(1);
    let chunk = combos.len().div_ceil(threads).max(1);
    let mut records: Vec<FoundRecord> = Vec::new();
    let mut failure: Option<nonfree::Error> = None;
    std::thread::scope(|scope| {
        let mut handles = Vec::new();
        for chunk_combos in combos.chunks(chunk) {
            let job_ref = &job;
            handles.push(scope.spawn(move || -> Result<Vec<FoundRecord>> {
                let mut out = Vec::new();
                for fixed in chunk_combos {
                    let c = conic_for_slot(fixed.clone(), job_ref.slot)?;
                    let pts = points_threaded(&c, job_ref.x_abs_bound, job_ref.orbit_steps, 1);
                    out.extend(records_for_points(&c, &pts, Some(&job_ref.target))?);
                }
                Ok(out)
            }));
        }
        for h in handles {
            match h.join().expect("hunt worker panicked") {
                Ok(rs) => records.extend(rs),
                Err(e) => failure = Some(e),
            }
        }
    });
    if let Some(e) = failure {
        return Err(e);
    }
    records.sort_by(|a, b| {
        let da = a.distance.as_ref().expect("hunt records carry distances");
        let db = b.distance.as_ref().expect("hunt records carry distances");
        da.cmp(db)
            .then_with(|| a.cert.q.cmp(&b.cert.q))
            .then_with(|| a.cert.tuple.entries().cmp(b.cert.tuple.entries()))
    });
    Ok(records)
}

/// Plain-text nearest-N report.
pub fn hunt_report(job: &HuntJob, records: &[FoundRecord], top: usize) -> String {
    let mut out = format!("target = {}\n", job.target);
    out.push_str(&format!("verified records = {}\n", records.len()));
    out.push_str("rank\tq\tdistance\ttuple\n");
    for (i, r) in records.iter().take(top).enumerate() {
        let d = r.distance.as_ref().expect("hunt records carry distances");
        out.push_str(&format!(
            "{}\t{}\t{}\t{}\n",
            i + 1,
            r.cert.q,
            d.to_decimal_string(12),
            r.cert.tuple,
        ));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use nonfree::conic::conic_points;
    use nonfree::rat::Rat;

    fn smilga() -> ConicSpec {
        conic_for_slot(
            [Int::from(1), Int::from(-1), Int::from(1), Int::from(-1)],
            5,
        )
        .unwrap()
    }

    #[test]
    fn threaded_scan_matches_single() {
        let c = smilga();
        let single = conic_points(&c, 600, 2);
        for threads in [1, 2, 3, 8] {
            assert_eq!(points_threaded(&c, 600, 2, threads), single);
        }
    }

    #[test]
    fn solve_smilga_records() {
        let (_, records) = solve_slot(
            [Int::from(1), Int::from(-1), Int::from(1), Int::from(-1)],
            5,
            1000,
            0,
            2,
            None,
        )
        .unwrap();
        let qs: Vec<String> = records.iter().map(|r| r.cert.q.to_string()).collect();
        assert!(qs.contains(&"3".to_string()));
        assert!(qs.contains(&"8/3".to_string()));
        assert!(qs.contains(&"55/21".to_string()));
        for r in &records {
            assert!(r.cert.is_fully_verified());
        }
    }

    #[test]
    fn hunt_orders_by_distance() {
        let job = HuntJob {
            ranges: [
                SlotRange { lo: 1, hi: 1 },
                SlotRange { lo: -1, hi: -1 },
                SlotRange { lo: 1, hi: 1 },
                SlotRange { lo: -1, hi: -1 },
            ],
            slot: 5,
            x_abs_bound: 600,
            orbit_steps: 0,
            threads: 2,
            target: Target::Point(Rat::from(3)),
        };
        let records = hunt(&job).unwrap();
        assert!(!records.is_empty());
        assert!(records[0].distance.as_ref().unwrap().is_zero());
        for w in records.windows(2) {
            assert!(w[0].distance.as_ref().unwrap() <= w[1].distance.as_ref().unwrap());
        }
    }

    #[test]
    fn range_parsing() {
        let r = SlotRange::parse("-3..5").unwrap();
        assert_eq!(
            r.values().collect::<Vec<_>>(),
            vec![-3, -2, -1, 1, 2, 3, 4, 5]
        );
        assert!(SlotRange::parse("5..3").is_err());
        assert!(SlotRange::parse("0..0").is_err());
        assert!(SlotRange::parse("abc").is_err());
    }
}
