//! Batch runner behind the `rmatrix` binary, and structural dumps.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde_json::{json, Value};

use crate::bialgebra::{delta, verify_coassociativity, verify_counit_law, DirectSumElement};
use crate::braid::{verify_braid_relations, verify_involution, verify_reduced_words, RepSpace};
use crate::error::{domain, Error, Result};
use crate::json::{block_doc, block_family_to_json};
use crate::limits::Limits;
use crate::monoid::{check_unit_bialgebra, check_wcs_coassoc, check_wcs_unit};
use crate::perm::GridPermutation;
use crate::report::VerificationReport;
use crate::rmatrix::{
    build_p, build_q, verify_counit_r_with, verify_hexagon_left_with, verify_hexagon_right_with,
    verify_intertwiner_with, verify_p_equals_q, verify_triangularity_with, verify_ybe_with, ArithmeticR,
    IdentityR, RFamily,
};

/// Default range for suites indexed by a pair `(n, m)`.
pub const DEFAULT_DOUBLE_MAX: usize = 12;
/// Default range for suites indexed by a triple `(n, m, l)`.
pub const DEFAULT_TRIPLE_MAX: usize = 6;
/// Default largest summand for the braid suite.
pub const DEFAULT_BRAID_MAX: usize = 5;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Suite {
    Wcs,
    Bialgebra,
    Intertwiner,
    Hexagons,
    Triangular,
    Ybe,
    Counit,
    Braid,
}

impl Suite {
    pub const ALL: [Suite; 8] = [
        Suite::Wcs,
        Suite::Bialgebra,
        Suite::Intertwiner,
        Suite::Hexagons,
        Suite::Triangular,
        Suite::Ybe,
        Suite::Counit,
        Suite::Braid,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Wcs => "wcs",
            Suite::Bialgebra => "bialgebra",
            Suite::Intertwiner => "intertwiner",
            Suite::Hexagons => "hexagons",
            Suite::Triangular => "triangular",
            Suite::Ybe => "ybe",
            Suite::Counit => "counit",
            Suite::Braid => "braid",
        }
    }

    fn default_max(self) -> usize {
        match self {
            Suite::Wcs | Suite::Hexagons | Suite::Ybe => DEFAULT_TRIPLE_MAX,
            Suite::Braid => DEFAULT_BRAID_MAX,
            _ => DEFAULT_DOUBLE_MAX,
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| {
                let names: Vec<_> = Suite::ALL.iter().map(|s| s.name()).collect();
                domain(format!("unknown suite {s:?}; expected one of {}", names.join(", ")))
            })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum OutputFormat {
    #[default]
    Text,
    Json,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteConfig {
    pub max_n: Option<usize>,
    pub max_m: Option<usize>,
    pub max_l: Option<usize>,
    pub suites: Vec<Suite>,
    pub output: OutputFormat,
    /// Worker threads; `None` uses the available parallelism.
    pub parallelism: Option<usize>,
    pub timings: bool,
    /// Replace every R-matrix block by the identity. Used to confirm that the
    /// checks and exit codes react to a wrong R.
    pub inject_identity_r: bool,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        Self {
            max_n: None,
            max_m: None,
            max_l: None,
            suites: Vec::new(),
            output: OutputFormat::Text,
            parallelism: None,
            timings: false,
            inject_identity_r: false,
        }
    }
}

struct Bounds {
    n: usize,
    m: usize,
    l: usize,
}

impl SuiteConfig {
    fn bounds(&self, suite: Suite) -> Result<Bounds> {
        let d = suite.default_max();
        let b = Bounds {
            n: self.max_n.unwrap_or(d),
            m: self.max_m.unwrap_or(d),
            l: self.max_l.unwrap_or(d),
        };
        if b.n == 0 || b.m == 0 || b.l == 0 {
            return Err(domain("range bounds must be positive"));
        }
        Ok(b)
    }

    fn family(&self) -> &'static dyn RFamily {
        if self.inject_identity_r {
            &IdentityR
        } else {
            &ArithmeticR
        }
    }
}

type Task = Box<dyn Fn(&Limits) -> Result<VerificationReport> + Send + Sync>;

fn pairs(b: &Bounds) -> impl Iterator<Item = (usize, usize)> {
    let m = b.m;
    (1..=b.n).flat_map(move |n| (1..=m).map(move |k| (n, k)))
}

fn triples(b: &Bounds) -> impl Iterator<Item = (usize, usize, usize)> {
    let (m, l) = (b.m, b.l);
    (1..=b.n).flat_map(move |n| (1..=m).flat_map(move |j| (1..=l).map(move |k| (n, j, k))))
}

fn tasks_for(suite: Suite, config: &SuiteConfig) -> Result<Vec<Task>> {
    let b = config.bounds(suite)?;
    let r = config.family();
    let mut tasks: Vec<Task> = Vec::new();
    match suite {
        Suite::Wcs => {
            for (a, bb, c) in triples(&b) {
                tasks.push(Box::new(move |lim| check_wcs_coassoc(a as u64, bb as u64, c as u64, lim)));
            }
            for a in 1..=b.n {
                tasks.push(Box::new(move |lim| check_wcs_unit(a as u64, lim)));
            }
            tasks.push(Box::new(|_| check_unit_bialgebra()));
        }
        Suite::Bialgebra => {
            let n = b.n;
            tasks.push(Box::new(move |lim| verify_counit_law(n, lim)));
            tasks.push(Box::new(move |lim| verify_coassociativity(n, lim)));
        }
        Suite::Intertwiner => {
            for (n, m) in pairs(&b) {
                tasks.push(Box::new(move |lim| verify_intertwiner_with(r, n, m, lim)));
            }
        }
        Suite::Hexagons => {
            for (n, m, l) in triples(&b) {
                tasks.push(Box::new(move |lim| verify_hexagon_left_with(r, n, m, l, lim)));
                tasks.push(Box::new(move |lim| verify_hexagon_right_with(r, n, m, l, lim)));
                if !config.inject_identity_r {
                    tasks.push(Box::new(move |_| verify_p_equals_q(n, m, l)));
                }
            }
        }
        Suite::Triangular => {
            for (n, m) in pairs(&b) {
                tasks.push(Box::new(move |lim| verify_triangularity_with(r, n, m, lim)));
            }
        }
        Suite::Ybe => {
            for (n, m, l) in triples(&b) {
                tasks.push(Box::new(move |lim| verify_ybe_with(r, n, m, l, lim)));
            }
        }
        Suite::Counit => {
            let n = b.n;
            tasks.push(Box::new(move |lim| verify_counit_r_with(r, n, lim)));
        }
        Suite::Braid => {
            // involution on {1..s} for every s ≤ max; braid relations at k=3
            // up to {1,2,3} and at k=4 on {1,2}; 𝔖_k words up to k=4.
            for s in 1..=b.n {
                tasks.push(Box::new(move |lim| verify_involution(&RepSpace::upto(s)?, lim)));
            }
            for s in 1..=b.n.min(3) {
                tasks.push(Box::new(move |lim| verify_braid_relations(&RepSpace::upto(s)?, 3, lim)));
            }
            let small = b.n.min(2);
            tasks.push(Box::new(move |lim| verify_braid_relations(&RepSpace::upto(small)?, 4, lim)));
            for k in 2..=4 {
                tasks.push(Box::new(move |lim| verify_reduced_words(&RepSpace::upto(small)?, k, lim)));
            }
        }
    }
    Ok(tasks)
}

/// Runs every selected suite, in the order given, and returns the reports in
/// a fixed order regardless of the number of workers.
pub fn run_suite(config: &SuiteConfig, limits: &Limits) -> Result<Vec<VerificationReport>> {
    let mut tasks = Vec::new();
    for &suite in &config.suites {
        tasks.extend(tasks_for(suite, config)?);
    }
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(jobs) = config.parallelism {
        if jobs == 0 {
            return Err(domain("--jobs must be positive"));
        }
        builder = builder.num_threads(jobs);
    }
    let pool = builder.build().map_err(|e| domain(e.to_string()))?;
    pool.install(|| tasks.par_iter().map(|task| task(limits)).collect())
}

/// 0 when every report passed, 1 otherwise.
pub fn exit_code(reports: &[VerificationReport]) -> i32 {
    if reports.iter().all(|r| r.pass) {
        0
    } else {
        1
    }
}

/// Renders reports one per line.
pub fn render(reports: &[VerificationReport], config: &SuiteConfig) -> String {
    let mut out = String::new();
    for r in reports {
        match config.output {
            OutputFormat::Json => out.push_str(&r.to_json_line(config.timings)),
            OutputFormat::Text if config.timings => {
                out.push_str(&format!("{r} ({:.3} ms)", r.elapsed.as_secs_f64() * 1e3))
            }
            OutputFormat::Text => out.push_str(&r.to_string()),
        }
        out.push('\n');
    }
    if config.output == OutputFormat::Text {
        let failed = reports.iter().filter(|r| !r.pass).count();
        out.push_str(&format!("{} checks, {} passed, {} failed\n", reports.len(), reports.len() - failed, failed));
    }
    out
}

/// A structural object to serialize.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DumpTarget {
    Chi(usize, usize),
    RMatrix(usize, usize),
    Delta(usize, usize, usize),
    P(usize, usize, usize),
    Q(usize, usize, usize),
}

impl FromStr for DumpTarget {
    type Err = Error;

    /// `chi:n,m`, `rmatrix:n,m`, `delta:n,i,j`, `P:n,m,l` or `Q:n,m,l`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || domain(format!("cannot parse dump target {s:?}; expected e.g. chi:2,3 or delta:6,2,2"));
        let (kind, args) = s.split_once(':').ok_or_else(bad)?;
        let nums = args
            .split(',')
            .map(|t| t.trim().parse::<usize>().map_err(|_| bad()))
            .collect::<Result<Vec<_>>>()?;
        let target = match (kind, nums.as_slice()) {
            ("chi", &[n, m]) => DumpTarget::Chi(n, m),
            ("rmatrix", &[n, m]) => DumpTarget::RMatrix(n, m),
            ("delta", &[n, i, j]) => DumpTarget::Delta(n, i, j),
            ("P", &[n, m, l]) => DumpTarget::P(n, m, l),
            ("Q", &[n, m, l]) => DumpTarget::Q(n, m, l),
            _ => return Err(bad()),
        };
        Ok(target)
    }
}

fn perm_pairs(p: &GridPermutation) -> Value {
    Value::Array(p.pairs().map(|(from, to)| json!([from, to])).collect())
}

fn positive(vals: &[usize]) -> Result<()> {
    if vals.contains(&0) {
        return Err(domain("dump dimensions must be positive"));
    }
    Ok(())
}

/// One-line JSON rendering of `target`, 1-based and deterministic.
pub fn dump(target: DumpTarget, limits: &Limits) -> Result<String> {
    let out = match target {
        DumpTarget::Chi(n, m) => {
            positive(&[n, m])?;
            limits.check_dim("χ table", n * m)?;
            perm_pairs(&crate::rmatrix::chi_table(n, m)?).to_string()
        }
        DumpTarget::RMatrix(n, m) => {
            positive(&[n, m])?;
            limits.check_dim("R^(n,m)", n * m)?;
            let r = crate::rmatrix::r_matrix(n, m)?;
            json!({
                "n": n,
                "m": m,
                "perm": perm_pairs(r.perm()),
                "matrix": block_doc(n, m, r.matrix()),
            })
            .to_string()
        }
        DumpTarget::Delta(n, i, j) => {
            positive(&[n])?;
            limits.check_dim("Δ(E)", n)?;
            block_family_to_json(&delta(&DirectSumElement::unit(n, i, j)?)?)
        }
        DumpTarget::P(n, m, l) | DumpTarget::Q(n, m, l) => {
            positive(&[n, m, l])?;
            limits.check_dim("M_n⊗M_m⊗M_l", n * m * l)?;
            let p = match target {
                DumpTarget::P(..) => build_p(n, m, l)?,
                _ => build_q(n, m, l)?,
            };
            perm_pairs(&p).to_string()
        }
    };
    Ok(out)
}
