mod args;
mod output;

use num_bigint::BigUint;
use num_traits::ToPrimitive;
use serde::Serialize;
use serde_json::{json, Map, Value};

use wild_mckay::covers::{
    count_extensions, count_rep_covers, enumerate_covers, parse_series, reduce, CensusOptions,
    GaloisField,
};
use wild_mckay::invariant_rings::{
    check_v3, reflection_jacobian_check, v3_relation, verify_v2v2_relation, QuadraticForm,
};
use wild_mckay::motivic::{parse_rational64, rational_string, MotivicValue};
use wild_mckay::stringy::{
    crepant_diagnostic, d_v, e0_class, e_st, m_st, m_st_projectivization, m_st_smooth_pair,
    m_st_stack_pair, point_count_e0, poincare_duality_check, sht, RepDatum,
};
use wild_mckay::{suite, Error};

pub use args::Cli;
use args::{Command, CoversCmd, RepArgs, StringyCmd, VerifyCmd};
pub use output::{print_error, render};

pub const EXIT_INTERNAL: i32 = 1;
pub const EXIT_PRECONDITION: i32 = 2;
pub const EXIT_VERIFICATION: i32 = 3;

/// A finished command: the report, and whether everything it checked held.
pub struct Outcome {
    pub report: Value,
    pub verified: bool,
}

impl Outcome {
    fn ok(report: Value) -> Self {
        Outcome { report, verified: true }
    }
}

pub fn exit_code(e: &Error) -> i32 {
    if e.is_precondition() || matches!(e, Error::Parse(_)) {
        EXIT_PRECONDITION
    } else {
        EXIT_INTERNAL
    }
}

fn to_value<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("reports serialize")
}

/// A motivic value as its display string plus the exact record.
fn motivic(v: &MotivicValue) -> Value {
    json!({ "display": v.to_string(), "value": to_value(v) })
}

fn big_uint(n: &BigUint) -> Value {
    n.to_u64().map(Value::from).unwrap_or_else(|| Value::String(n.to_string()))
}

fn rep_datum(a: &RepArgs) -> Result<RepDatum, Error> {
    RepDatum::new(a.p, a.dims.clone())
}

pub fn dispatch(cli: &Cli) -> Result<Outcome, Error> {
    match &cli.command {
        Command::Stringy(cmd) => stringy(cmd),
        Command::Covers(cmd) => covers(cmd),
        Command::Verify(cmd) => verify(cmd),
        Command::Suite(a) => {
            let r = suite::run(a.seed, &a.only).map_err(Error::Parse)?;
            Ok(Outcome { verified: r.passed, report: to_value(&r) })
        }
    }
}

fn stringy(cmd: &StringyCmd) -> Result<Outcome, Error> {
    match cmd {
        StringyCmd::Invariant(a) => {
            let rep = rep_datum(a)?;
            let m = m_st(&rep)?;
            let mut shts = Map::new();
            for s in 1..rep.p() {
                shts.insert(s.to_string(), sht(&rep, s)?.into());
            }
            let duality_ok = poincare_duality_check(&rep)?;
            let report = json!({
                "rep": to_value(&rep),
                "D_V": d_v(&rep),
                "sht": shts,
                "M_st": motivic(&m),
                "e_st": rational_string(&e_st(&rep)?),
                "crepant": to_value(&crepant_diagnostic(&rep)),
                "E0": motivic(&e0_class(&rep)?),
                "projectivized": motivic(&m_st_projectivization(&rep)?),
                "duality_ok": duality_ok,
            });
            Ok(Outcome { report, verified: duality_ok })
        }
        StringyCmd::Pair { p, a, stack, d } => {
            let a_val = parse_rational64(a)?;
            let (kind, v) = match (stack, p) {
                (true, Some(p)) => ("stack", m_st_stack_pair(*p, a_val)?),
                _ => ("smooth", m_st_smooth_pair(*d, a_val)?),
            };
            let mut report = json!({ "kind": kind, "a": a_val.to_string(), "M_st": motivic(&v) });
            match (stack, p) {
                (true, Some(p)) => report["p"] = json!(p),
                _ => report["d"] = json!(d),
            }
            Ok(Outcome::ok(report))
        }
        StringyCmd::Pointcount { rep, q } => {
            let r = rep_datum(rep)?;
            Ok(Outcome::ok(Value::String(rational_string(&point_count_e0(&r, *q)?))))
        }
    }
}

fn covers(cmd: &CoversCmd) -> Result<Outcome, Error> {
    match cmd {
        CoversCmd::Reduce { p, q, series } => {
            let field = GaloisField::new(*p, *q)?;
            let f = parse_series(&field, series)?;
            let cl = reduce(&field, &f)?;
            let terms: Vec<Value> = cl
                .rep
                .terms()
                .map(|(i, c)| json!([i, field.format_element(c)]))
                .collect();
            Ok(Outcome::ok(json!({
                "rep": { "display": cl.rep.format(&field), "terms": terms },
                "const_class": cl.const_class,
                "jump": cl.jump(),
            })))
        }
        CoversCmd::Census { p, q, max_exp, limit, workers } => {
            let opts = CensusOptions { limit: *limit, workers: (*workers).max(1) };
            let r = enumerate_covers(*p, *q, *max_exp, &opts)?;
            Ok(Outcome { verified: r.passed(), report: to_value(&r) })
        }
        CoversCmd::Count { p, q, jump, extensions } => {
            GaloisField::new(*p, *q)?;
            let n = if *extensions { count_extensions(*q, *jump)? } else { count_rep_covers(*q, *jump)? };
            Ok(Outcome::ok(big_uint(&n)))
        }
    }
}

fn verify(cmd: &VerifyCmd) -> Result<Outcome, Error> {
    let (ok, details) = match cmd {
        VerifyCmd::V3 { p, literal_d } => {
            let form = if *literal_d { QuadraticForm::Literal } else { QuadraticForm::Invariant };
            let r = check_v3(*p, &v3_relation(*p), form)?;
            (r.ok && r.generators_invariant, to_value(&r))
        }
        VerifyCmd::V2v2 => {
            let r = verify_v2v2_relation();
            (r.ok && r.invariance_ok, to_value(&r))
        }
        VerifyCmd::Reflection { p, d } => {
            let r = reflection_jacobian_check(*p, *d)?;
            (r.invariance_ok && r.det_ok, to_value(&r))
        }
    };
    Ok(Outcome { verified: ok, report: json!({ "ok": ok, "details": details }) })
}
