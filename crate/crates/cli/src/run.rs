//! Run orchestration: system resolution, order parsing, execution, and
//! report assembly.

use std::fmt;
use std::path::Path;

use dyngb::{
    distinct_term_count, dynamic_run, generate_cyclic, generate_katsura, is_groebner_oracle,
    static_run, Polynomial, RunResult, Strategy, StrategyConfig, TermOrdering,
};

use crate::report::{OrderReport, RunReport, StatsReport};
use crate::syntax::{parse_system, render_system, SystemFile};

#[derive(Clone, Debug)]
pub enum InputError {
    Io(String, String),
    Parse(String, String),
    BadSystemSpec(String),
    BadOrderSpec(String),
}

impl fmt::Display for InputError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            InputError::Io(path, e) => write!(f, "{}: {}", path, e),
            InputError::Parse(path, e) => write!(f, "{}: {}", path, e),
            InputError::BadSystemSpec(s) => write!(
                f,
                "unrecognized system `{}`; expected a file path, cyclic-N, or katsura-N",
                s
            ),
            InputError::BadOrderSpec(s) => write!(
                f,
                "unrecognized order `{}`; expected grevlex, lex, weight:w1,...,wn or matrix:r;r;...",
                s
            ),
        }
    }
}

impl std::error::Error for InputError {}

/// Resolves `cyclic-N`, `katsura-N` (the N-variable benchmark), or a file
/// in the system grammar.
pub fn resolve_system(spec: &str) -> Result<SystemFile, InputError> {
    if let Some(n) = spec.strip_prefix("cyclic-").and_then(|s| s.parse::<usize>().ok()) {
        let polynomials = generate_cyclic(n)
            .map_err(|e| InputError::BadSystemSpec(format!("{}: {}", spec, e)))?;
        return Ok(SystemFile {
            variables: (1..=n).map(|i| format!("x{}", i)).collect(),
            polynomials,
        });
    }
    if let Some(n) = spec.strip_prefix("katsura-").and_then(|s| s.parse::<usize>().ok()) {
        // katsura-N is the N-variable system: x_0..x_{N-1}.
        if n < 2 {
            return Err(InputError::BadSystemSpec(format!(
                "{}: need at least 2 variables",
                spec
            )));
        }
        let polynomials = generate_katsura(n - 1)
            .map_err(|e| InputError::BadSystemSpec(format!("{}: {}", spec, e)))?;
        return Ok(SystemFile {
            variables: (0..n).map(|i| format!("x{}", i)).collect(),
            polynomials,
        });
    }
    if !Path::new(spec).exists() {
        return Err(InputError::BadSystemSpec(spec.to_string()));
    }
    let text = std::fs::read_to_string(spec)
        .map_err(|e| InputError::Io(spec.to_string(), e.to_string()))?;
    parse_system(&text).map_err(|e| InputError::Parse(spec.to_string(), e.to_string()))
}

pub fn parse_order(spec: &str, nvars: usize) -> Result<TermOrdering, InputError> {
    let bad = || InputError::BadOrderSpec(spec.to_string());
    match spec {
        "grevlex" => return Ok(TermOrdering::grevlex()),
        "lex" => return Ok(TermOrdering::lex()),
        _ => {}
    }
    if let Some(rest) = spec.strip_prefix("weight:") {
        let weight: Vec<i64> = rest
            .split(',')
            .map(|x| x.trim().parse::<i64>())
            .collect::<Result<_, _>>()
            .map_err(|_| bad())?;
        if weight.len() != nvars || weight.iter().any(|&w| w <= 0) {
            return Err(bad());
        }
        return Ok(TermOrdering::weighted(weight));
    }
    if let Some(rest) = spec.strip_prefix("matrix:") {
        let rows: Vec<Vec<i64>> = rest
            .split(';')
            .map(|row| {
                row.split(',')
                    .map(|x| x.trim().parse::<i64>())
                    .collect::<Result<Vec<i64>, _>>()
            })
            .collect::<Result<_, _>>()
            .map_err(|_| bad())?;
        if rows.is_empty() || rows.iter().any(|r| r.len() != nvars) {
            return Err(bad());
        }
        return Ok(TermOrdering::matrix(rows));
    }
    Err(bad())
}

#[derive(Clone, Debug)]
pub struct RunSpec {
    pub system: String,
    pub static_mode: bool,
    pub order: String,
    pub strategy: Strategy,
    pub weighted_sugar: bool,
    pub use_boundary_vectors: bool,
    pub use_disjoint_cones: bool,
    pub homogenize: bool,
    pub verify: bool,
    pub seed: u64,
}

pub struct RunOutput {
    pub report: RunReport,
    pub result: RunResult,
    pub variables: Vec<String>,
}

pub fn run_one(spec: &RunSpec) -> Result<RunOutput, InputError> {
    let mut sf = resolve_system(&spec.system)?;
    if spec.homogenize {
        sf.polynomials = sf.polynomials.iter().map(Polynomial::homogenize).collect();
        sf.variables.push("h".to_string());
    }
    let cfg = StrategyConfig {
        strategy: spec.strategy,
        weighted_sugar: spec.weighted_sugar,
        use_boundary_vectors: spec.use_boundary_vectors,
        use_disjoint_cones: spec.use_disjoint_cones,
        seed: spec.seed,
        ..StrategyConfig::default()
    };
    let result = if spec.static_mode {
        let order = parse_order(&spec.order, sf.variables.len())?;
        static_run(&sf.polynomials, &order, &cfg)
    } else {
        dynamic_run(&sf.polynomials, &cfg)
    };
    let verified = spec
        .verify
        .then(|| is_groebner_oracle(&result.basis, &result.order));
    let name = if spec.homogenize {
        format!("{}-hom", spec.system)
    } else {
        spec.system.clone()
    };
    let report = RunReport {
        system_name: name,
        mode: if spec.static_mode { "static" } else { "dynamic" }.to_string(),
        stats: StatsReport::from(&result.stats),
        basis_size_pols: result.basis.len(),
        basis_size_terms: distinct_term_count(&result.basis),
        final_order: OrderReport::from(&result.order),
        verified,
    };
    Ok(RunOutput {
        report,
        result,
        variables: sf.variables,
    })
}

/// Runs the specs, optionally in parallel, preserving input order.
pub fn run_all(specs: &[RunSpec], jobs: usize) -> Vec<Result<RunOutput, InputError>> {
    if jobs <= 1 || specs.len() <= 1 {
        return specs.iter().map(run_one).collect();
    }
    let results: Vec<std::sync::Mutex<Option<Result<RunOutput, InputError>>>> =
        (0..specs.len()).map(|_| std::sync::Mutex::new(None)).collect();
    let next = std::sync::atomic::AtomicUsize::new(0);
    std::thread::scope(|scope| {
        for _ in 0..jobs.min(specs.len()) {
            scope.spawn(|| loop {
                let i = next.fetch_add(1, std::sync::atomic::Ordering::SeqCst);
                if i >= specs.len() {
                    break;
                }
                let out = run_one(&specs[i]);
                *results[i].lock().unwrap() = Some(out);
            });
        }
    });
    results
        .into_iter()
        .map(|slot| slot.into_inner().unwrap().expect("worker filled slot"))
        .collect()
}

/// Renders the reduced basis in the system grammar.
pub fn render_basis(out: &RunOutput) -> String {
    render_system(&SystemFile {
        variables: out.variables.clone(),
        polynomials: out.result.basis.clone(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn resolves_generators_and_rejects_junk() {
        let c4 = resolve_system("cyclic-4").unwrap();
        assert_eq!(c4.variables.len(), 4);
        assert_eq!(c4.polynomials, generate_cyclic(4).unwrap());

        let k6 = resolve_system("katsura-6").unwrap();
        assert_eq!(k6.variables.len(), 6);
        assert_eq!(k6.polynomials, generate_katsura(5).unwrap());

        assert!(resolve_system("cyclic-1").is_err());
        assert!(resolve_system("no-such-file.txt").is_err());
    }

    #[test]
    fn order_specs() {
        assert_eq!(parse_order("grevlex", 3).unwrap(), TermOrdering::grevlex());
        assert_eq!(parse_order("lex", 3).unwrap(), TermOrdering::lex());
        assert_eq!(
            parse_order("weight:2,1,1", 3).unwrap(),
            TermOrdering::weighted(vec![2, 1, 1])
        );
        assert_eq!(
            parse_order("matrix:1,3,2,4;1,1,1,0;1,1,0,0;1,0,0,0", 4).unwrap(),
            TermOrdering::matrix(vec![
                vec![1, 3, 2, 4],
                vec![1, 1, 1, 0],
                vec![1, 1, 0, 0],
                vec![1, 0, 0, 0],
            ])
        );
        assert!(parse_order("weight:2,1", 3).is_err());
        assert!(parse_order("bogus", 3).is_err());
    }
}
