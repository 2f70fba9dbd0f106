use num::Zero;

use super::rational::{qi, Q};
use super::series::Series;

/// `Σ_j channels[j](t) · ln(t)^j`. Channel 0 is the analytic part, channel 1 the
/// log part; products of log-carrying factors populate higher channels.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LogSeries {
    channels: Vec<Series>,
}

impl LogSeries {
    pub fn new(analytic: Series, logpart: Series) -> Self {
        LogSeries::from_channels(vec![analytic, logpart])
    }

    pub fn from_channels(mut channels: Vec<Series>) -> Self {
        assert!(!channels.is_empty());
        while channels.len() > 1 && channels.last().unwrap().is_zero() {
            channels.pop();
        }
        LogSeries { channels }
    }

    pub fn analytic_only(s: Series) -> Self {
        LogSeries { channels: vec![s] }
    }

    pub fn analytic(&self) -> &Series {
        &self.channels[0]
    }

    /// Coefficient series of `ln t` (zero when absent).
    pub fn logpart(&self) -> Series {
        self.channels.get(1).cloned().unwrap_or_else(|| Series::zero(self.order()))
    }

    pub fn channels(&self) -> &[Series] {
        &self.channels
    }

    pub fn order(&self) -> i64 {
        self.channels.iter().map(|c| c.order()).min().unwrap()
    }

    pub fn is_zero(&self) -> bool {
        self.channels.iter().all(|c| c.is_zero())
    }

    /// Every log channel vanishes (the analytic part may not).
    pub fn log_free(&self) -> bool {
        self.channels[1..].iter().all(|c| c.is_zero())
    }

    /// Log channels vanish below `t^k`.
    pub fn log_free_below(&self, k: i64) -> bool {
        self.channels[1..].iter().all(|c| c.vanishes_below(k))
    }

    fn map(&self, f: impl Fn(&Series) -> Series) -> Self {
        LogSeries::from_channels(self.channels.iter().map(f).collect())
    }

    pub fn scale(&self, x: &Q) -> Self {
        self.map(|c| c.scale(x))
    }

    pub fn shift(&self, k: i64) -> Self {
        self.map(|c| c.shift(k))
    }

    pub fn truncate(&self, order: i64) -> Self {
        self.map(|c| c.truncate(order))
    }

    pub fn mul_series(&self, s: &Series) -> Self {
        self.map(|c| c.mul(s))
    }

    pub fn add(&self, o: &LogSeries) -> Self {
        let n = self.channels.len().max(o.channels.len());
        let ord = self.order().min(o.order());
        let get = |x: &LogSeries, j: usize| x.channels.get(j).cloned().unwrap_or_else(|| Series::zero(ord));
        LogSeries::from_channels((0..n).map(|j| get(self, j).add(&get(o, j))).collect())
    }

    pub fn sub(&self, o: &LogSeries) -> Self {
        self.add(&o.scale(&-qi(1)))
    }

    pub fn mul(&self, o: &LogSeries) -> Self {
        let n = self.channels.len() + o.channels.len() - 1;
        let mut out: Vec<Option<Series>> = vec![None; n];
        for (i, a) in self.channels.iter().enumerate() {
            for (j, b) in o.channels.iter().enumerate() {
                let p = a.mul(b);
                out[i + j] = Some(match out[i + j].take() {
                    None => p,
                    Some(acc) => acc.add(&p),
                });
            }
        }
        LogSeries::from_channels(out.into_iter().map(Option::unwrap).collect())
    }

    pub fn pow(&self, e: u32) -> Self {
        if e == 0 {
            return LogSeries::analytic_only(Series::one(self.order() - self.channels[0].valuation().min(self.order())));
        }
        let mut r = self.clone();
        for _ in 1..e {
            r = r.mul(self);
        }
        r
    }

    /// `(Σ s_j ln^j)' = Σ (s_j' + (j+1) s_{j+1}/t) ln^j`.
    pub fn derivative(&self) -> Self {
        let n = self.channels.len();
        let ch = (0..n)
            .map(|j| {
                let d = self.channels[j].derivative();
                if j + 1 < n {
                    d.add(&self.channels[j + 1].shift(-1).scale(&qi(j as i64 + 1)))
                } else {
                    d
                }
            })
            .collect();
        LogSeries::from_channels(ch)
    }

    pub fn coeff(&self, channel: usize, k: i64) -> Q {
        self.channels.get(channel).map(|c| c.coeff(k)).unwrap_or_else(Q::zero)
    }
}

impl From<Series> for LogSeries {
    fn from(s: Series) -> Self {
        LogSeries::analytic_only(s)
    }
}
