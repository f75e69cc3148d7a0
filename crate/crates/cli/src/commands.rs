use serde::Serialize;
use ssi_core::{
    gotzmann_decomposition, growth_vector, is_segment, lex_ideal, macaulay_decomposition,
    minimalize, parse_polynomial, search_degree, strongly_stable_ideals, Error, Monomial, NumPoly,
    SegmentKind, StronglyStableIdeal, VariableNames,
};

use crate::{Command, Format, IdealArgs, SegmentType};

pub enum CliError {
    /// Bad arguments or unmet preconditions; exit code 1.
    Invalid(String),
    /// Exit code 2.
    Internal(String),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::Internal(_) | Error::WeightOverflow => CliError::Internal(e.to_string()),
            _ => CliError::Invalid(e.to_string()),
        }
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::Internal(e.to_string())
    }
}

type Result<T> = std::result::Result<T, CliError>;

pub struct Context {
    pub format: Format,
    pub names: Option<Vec<String>>,
}

impl Context {
    fn names(&self, arity: usize) -> Result<VariableNames> {
        match &self.names {
            None => Ok(VariableNames::default_for(arity)),
            Some(list) if list.len() != arity => Err(CliError::Invalid(format!(
                "--names lists {} variables, the ring has {arity}",
                list.len()
            ))),
            Some(list) => Ok(VariableNames::new(list.clone())?),
        }
    }

    fn emit<T: Serialize>(&self, text: impl FnOnce() -> String, json: &T) -> Result<String> {
        Ok(match self.format {
            Format::Text => text(),
            Format::Json => serde_json::to_string(json)? + "\n",
        })
    }
}

#[derive(Serialize)]
struct IdealJson {
    arity: usize,
    generators: Vec<Vec<u32>>,
}

impl IdealJson {
    fn new(ideal: &StronglyStableIdeal) -> Self {
        IdealJson {
            arity: ideal.arity(),
            generators: ideal.generators().iter().map(|g| g.exponents().to_vec()).collect(),
        }
    }
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct FailureJson {
    step: u64,
    remainder: String,
    reason: String,
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct IsHpJson {
    polynomial: String,
    hilbert_polynomial: bool,
    failure: Option<FailureJson>,
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct GotzmannJson {
    polynomial: String,
    terms: Vec<usize>,
    gotzmann_number: u64,
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct MacaulayJson {
    polynomial: String,
    coefficients: Vec<u64>,
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct GrowthVectorJson {
    polynomial: String,
    arity: usize,
    degree: u32,
    growth_vector: Option<Vec<u64>>,
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct EnumerateJson {
    polynomial: String,
    arity: usize,
    degree_used: u32,
    count: usize,
    ideals: Vec<IdealJson>,
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct HilbertPolyJson {
    ideal: IdealJson,
    hilbert_polynomial: String,
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct RegularityJson {
    ideal: IdealJson,
    regularity: u32,
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct IsBorelJson {
    generators: Vec<Vec<u32>>,
    strongly_stable: bool,
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct SegmentJson {
    segment: bool,
    weights: Option<Vec<u64>>,
    checked_pairs: usize,
}

fn polynomial(src: &str) -> Result<NumPoly> {
    Ok(parse_polynomial(src)?)
}

/// `K` variables means projective dimension `K - 1`.
fn dimension(vars: usize) -> Result<usize> {
    vars.checked_sub(1).ok_or_else(|| CliError::Invalid("--vars must be positive".into()))
}

/// Fails with the greedy step when `p` is not a Hilbert polynomial.
fn require_hilbert(p: &NumPoly) -> Result<()> {
    gotzmann_decomposition(p)?;
    Ok(())
}

fn list<T: std::fmt::Display>(items: &[T]) -> String {
    let parts: Vec<String> = items.iter().map(T::to_string).collect();
    format!("[{}]", parts.join(", "))
}

/// `C(t+c, k)` as text.
fn binomial_text(shift: i64, bottom: usize) -> String {
    match shift {
        0 => format!("C(t, {bottom})"),
        c if c > 0 => format!("C(t+{c}, {bottom})"),
        c => format!("C(t{c}, {bottom})"),
    }
}

fn parse_ideal_generators(ctx: &Context, args: &IdealArgs) -> Result<(VariableNames, Vec<Monomial>)> {
    if args.vars == 0 {
        return Err(CliError::Invalid("--vars must be positive".into()));
    }
    let names = ctx.names(args.vars)?;
    let gens = names.parse_generators(&args.ideal)?;
    Ok((names, gens))
}

fn parse_ideal(ctx: &Context, args: &IdealArgs) -> Result<(VariableNames, StronglyStableIdeal)> {
    let (names, gens) = parse_ideal_generators(ctx, args)?;
    let ideal = StronglyStableIdeal::new(args.vars, gens)?;
    Ok((names, ideal))
}

pub fn run(ctx: &Context, command: &Command) -> Result<String> {
    match command {
        Command::IsHp(arg) => {
            let p = polynomial(&arg.poly)?;
            let failure = match gotzmann_decomposition(&p) {
                Ok(_) => None,
                Err(Error::NotHilbertPolynomial { step, remainder, reason, .. }) => {
                    Some(FailureJson { step, remainder: remainder.to_string(), reason: reason.to_string() })
                }
                Err(e) => return Err(e.into()),
            };
            let json = IsHpJson { polynomial: p.to_string(), hilbert_polynomial: failure.is_none(), failure };
            ctx.emit(
                || match &json.failure {
                    None => "true\n".into(),
                    Some(f) => format!("false\ngreedy step {} fails on remainder {} ({})\n", f.step, f.remainder, f.reason),
                },
                &json,
            )
        }
        Command::Gotzmann(arg) => {
            let p = polynomial(&arg.poly)?;
            let g = gotzmann_decomposition(&p)?;
            let terms = g.terms();
            let json = GotzmannJson { polynomial: p.to_string(), terms, gotzmann_number: g.gotzmann_number() };
            ctx.emit(
                || {
                    let sum: Vec<String> = json
                        .terms
                        .iter()
                        .enumerate()
                        .map(|(i, &a)| binomial_text(a as i64 - i as i64, a))
                        .collect();
                    let sum = if sum.is_empty() { "0".to_string() } else { sum.join(" + ") };
                    format!(
                        "terms: {}\ngotzmann number: {}\n{} = {}\n",
                        list(&json.terms),
                        json.gotzmann_number,
                        json.polynomial,
                        sum
                    )
                },
                &json,
            )
        }
        Command::Macaulay(arg) => {
            let p = polynomial(&arg.poly)?;
            let m = macaulay_decomposition(&p)?;
            let json = MacaulayJson { polynomial: p.to_string(), coefficients: m.coefficients().to_vec() };
            ctx.emit(
                || {
                    let sum: Vec<String> = json
                        .coefficients
                        .iter()
                        .enumerate()
                        .map(|(k, &mk)| {
                            let k = k as i64;
                            format!(
                                "[{} - {}]",
                                binomial_text(k, k as usize + 1),
                                binomial_text(k - mk as i64, k as usize + 1)
                            )
                        })
                        .collect();
                    format!("coefficients: {}\n{} = {}\n", list(&json.coefficients), json.polynomial, sum.join(" + "))
                },
                &json,
            )
        }
        Command::GrowthVector { poly, vars, degree } => {
            let p = polynomial(&poly.poly)?;
            let n = dimension(*vars)?;
            if n == 0 {
                return Err(CliError::Invalid("--vars must be at least 2".into()));
            }
            require_hilbert(&p)?;
            let gv = growth_vector(&p, *degree, n)?.map(|g| g.entries().to_vec());
            let json = GrowthVectorJson { polynomial: p.to_string(), arity: *vars, degree: *degree, growth_vector: gv };
            ctx.emit(
                || match &json.growth_vector {
                    Some(g) => format!("{}\n", list(g)),
                    None => "infeasible\n".into(),
                },
                &json,
            )
        }
        Command::LexIdeal { poly, vars } => {
            let p = polynomial(&poly.poly)?;
            let n = dimension(*vars)?;
            let names = ctx.names(*vars)?;
            let lex = lex_ideal(&p, n)?;
            ctx.emit(|| format!("{}\n", names.ideal(lex.generators())), &IdealJson::new(&lex))
        }
        Command::Enumerate { poly, vars, max_regularity } => {
            let p = polynomial(&poly.poly)?;
            let n = dimension(*vars)?;
            let names = ctx.names(*vars)?;
            let ideals = strongly_stable_ideals(&p, n, *max_regularity)?;
            let json = EnumerateJson {
                polynomial: p.to_string(),
                arity: *vars,
                degree_used: search_degree(&p, *max_regularity)?,
                count: ideals.len(),
                ideals: ideals.iter().map(IdealJson::new).collect(),
            };
            ctx.emit(
                || ideals.iter().map(|i| names.ideal(i.generators()) + "\n").collect(),
                &json,
            )
        }
        Command::HilbertPoly(args) => {
            let (_, ideal) = parse_ideal(ctx, args)?;
            let p = ideal.hilbert_polynomial();
            let json = HilbertPolyJson { ideal: IdealJson::new(&ideal), hilbert_polynomial: p.to_string() };
            ctx.emit(|| format!("{p}\n"), &json)
        }
        Command::Regularity(args) => {
            let (_, ideal) = parse_ideal(ctx, args)?;
            let json = RegularityJson { ideal: IdealJson::new(&ideal), regularity: ideal.regularity() };
            ctx.emit(|| format!("{}\n", json.regularity), &json)
        }
        Command::IsBorel(args) => {
            let (_, gens) = parse_ideal_generators(ctx, args)?;
            let gens = minimalize(gens);
            let json = IsBorelJson {
                generators: gens.iter().map(|g| g.exponents().to_vec()).collect(),
                strongly_stable: ssi_core::is_strongly_stable(&gens),
            };
            ctx.emit(|| format!("{}\n", json.strongly_stable), &json)
        }
        Command::Segment { kind, ideal: args } => {
            let (names, ideal) = parse_ideal(ctx, args)?;
            let kind = match kind {
                SegmentType::Hilb => SegmentKind::Hilb,
                SegmentType::Reg => SegmentKind::Reg,
                SegmentType::Gen => SegmentKind::Gen,
            };
            let outcome = is_segment(&ideal, kind)?;
            let json = SegmentJson {
                segment: outcome.is_segment(),
                weights: outcome.weights.as_ref().map(|w| w.weights().to_vec()),
                checked_pairs: outcome.checked_pairs,
            };
            ctx.emit(
                || {
                    let mut out = format!("{}\n", json.segment);
                    if let Some(w) = &json.weights {
                        out += &format!("weights ({}): {}\n", names.names().join(", "), list(w));
                    }
                    out += &format!("checked pairs: {}\n", json.checked_pairs);
                    out
                },
                &json,
            )
        }
    }
}
