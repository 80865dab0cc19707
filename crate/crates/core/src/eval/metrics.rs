use std::collections::HashSet;

use super::truth::GroundTruthSet;
use crate::error::{Error, Result};
use crate::solver::RankingTable;

/// Spearman correlation between `primary` and `other` over the top `n`
/// entities of `primary`.
///
/// Each selected entity is paired with its full-list rank in `other`
/// (`other.len() + 1` when absent). Both rank lists are re-ranked among the
/// `n` pairs with average ranks for ties, and the coefficient is the
/// Pearson correlation of those ranks.
pub fn spearman_top_n(primary: &RankingTable, other: &RankingTable, n: usize) -> Result<f64> {
    if primary.class != other.class {
        return Err(Error::ClassMismatch(primary.class, other.class));
    }
    if n < 2 {
        return Err(Error::TooFewForCorrelation(n));
    }
    if n > primary.len() {
        return Err(Error::CutoffExceedsTable { n, len: primary.len() });
    }
    let index = other.rank_index();
    let absent = (other.len() + 1) as f64;
    let top = primary.top(n);
    let x: Vec<f64> = top.iter().map(|r| r.rank as f64).collect();
    let y: Vec<f64> = top
        .iter()
        .map(|r| index.get(r.id.as_str()).map_or(absent, |&k| k as f64))
        .collect();
    pearson(&average_ranks(&x), &average_ranks(&y))
}

/// 1-based ranks with ties sharing the mean of the positions they span.
pub fn average_ranks(values: &[f64]) -> Vec<f64> {
    let mut order: Vec<usize> = (0..values.len()).collect();
    order.sort_by(|&a, &b| values[a].total_cmp(&values[b]));
    let mut ranks = vec![0.0; values.len()];
    let mut start = 0;
    while start < order.len() {
        let mut end = start + 1;
        while end < order.len() && values[order[end]] == values[order[start]] {
            end += 1;
        }
        // positions start+1 ..= end
        let mean = (start + 1 + end) as f64 / 2.0;
        for &i in &order[start..end] {
            ranks[i] = mean;
        }
        start = end;
    }
    ranks
}

fn pearson(x: &[f64], y: &[f64]) -> Result<f64> {
    let n = x.len() as f64;
    let mx = x.iter().sum::<f64>() / n;
    let my = y.iter().sum::<f64>() / n;
    let (mut sxy, mut sxx, mut syy) = (0.0, 0.0, 0.0);
    for (a, b) in x.iter().zip(y) {
        sxy += (a - mx) * (b - my);
        sxx += (a - mx) * (a - mx);
        syy += (b - my) * (b - my);
    }
    if sxx == 0.0 || syy == 0.0 {
        return Err(Error::ConstantRanks);
    }
    Ok((sxy / (sxx * syy).sqrt()).clamp(-1.0, 1.0))
}

fn hits_in_top(ranking: &RankingTable, truth: &GroundTruthSet, n: usize) -> Result<usize> {
    if ranking.class != truth.class {
        return Err(Error::ClassMismatch(ranking.class, truth.class));
    }
    let members: HashSet<&str> = truth.members().iter().map(String::as_str).collect();
    Ok(ranking.top(n).iter().filter(|r| members.contains(r.id.as_str())).count())
}

/// Fraction of the truth set found among the top `n`.
pub fn recall_at_n(ranking: &RankingTable, truth: &GroundTruthSet, n: usize) -> Result<f64> {
    if truth.is_empty() {
        return Err(Error::EmptyTruth);
    }
    Ok(hits_in_top(ranking, truth, n)? as f64 / truth.len() as f64)
}

/// Fraction of the top `n` that belongs to the truth set.
pub fn precision_at_n(ranking: &RankingTable, truth: &GroundTruthSet, n: usize) -> Result<f64> {
    if n == 0 {
        return Err(Error::ZeroCutoff);
    }
    Ok(hits_in_top(ranking, truth, n)? as f64 / n as f64)
}

/// Rank of each id in input order, `None` when absent.
pub fn rank_lookup(ranking: &RankingTable, ids: &[&str]) -> Vec<(String, Option<usize>)> {
    let index = ranking.rank_index();
    ids.iter().map(|&id| (id.to_string(), index.get(id).copied())).collect()
}
