use fischer_lab::rational::{format_rational, parse_rational};
use fischer_lab::virasoro::{
    central_charge, fuse, sigma_sector, weight_exists, weight_grid, Label, WeightEntry,
};
use fischer_lab::{Error, Result};
use serde::Serialize;

use crate::args::FusionArgs;
use crate::report::plain;

#[derive(Debug, Serialize)]
pub struct FusionReport {
    pub m: u32,
    pub central_charge: String,
    /// Whether `c_m` itself occurs as a highest weight.
    pub central_charge_is_weight: bool,
    pub product: Option<Product>,
    pub grid: Option<Vec<WeightEntry>>,
    pub sector: Option<Vec<WeightEntry>>,
    pub weight_query: Option<WeightQuery>,
}

#[derive(Debug, Serialize)]
pub struct Product {
    pub left: WeightEntry,
    pub right: WeightEntry,
    pub terms: Vec<WeightEntry>,
}

#[derive(Debug, Serialize)]
pub struct WeightQuery {
    pub weight: String,
    pub exists: bool,
}

fn parse_label(m: u32, text: &str) -> Result<Label> {
    let bad = || Error::InvalidParameter(format!("label {text:?} is not of the form r,s"));
    let (r, s) = text.split_once(',').ok_or_else(bad)?;
    let r = r.trim().parse().map_err(|_| bad())?;
    let s = s.trim().parse().map_err(|_| bad())?;
    Label::new(m, r, s)
}

fn entry(l: &Label) -> WeightEntry {
    WeightEntry { r: l.r, s: l.s, weight: l.weight(), tau: l.tau_sign(), sigma: l.sigma_sign().ok() }
}

pub fn run(args: &FusionArgs) -> Result<FusionReport> {
    let m = args.m;
    let c = central_charge(m)?;
    let product = match (&args.left, &args.right) {
        (Some(a), Some(b)) => {
            let (a, b) = (parse_label(m, a)?, parse_label(m, b)?);
            Some(Product {
                left: entry(&a),
                right: entry(&b),
                terms: fuse(&a, &b)?.iter().map(entry).collect(),
            })
        }
        (None, None) => None,
        _ => return Err(Error::InvalidParameter("--left and --right go together".into())),
    };
    let weight_query = match &args.weight {
        Some(h) => {
            let h = parse_rational(h)?;
            Some(WeightQuery { exists: weight_exists(m, &h)?, weight: format_rational(&h) })
        }
        None => None,
    };
    if product.is_none() && weight_query.is_none() && !args.grid && !args.sector {
        return Err(Error::InvalidParameter(
            "nothing to do: give --left/--right, --grid, --sector or --weight".into(),
        ));
    }
    Ok(FusionReport {
        m,
        central_charge_is_weight: weight_exists(m, &c)?,
        central_charge: format_rational(&c),
        product,
        grid: if args.grid { Some(weight_grid(m)?) } else { None },
        sector: if args.sector { Some(sigma_sector(m)?.iter().map(entry).collect()) } else { None },
        weight_query,
    })
}

fn sign(x: i8) -> char {
    if x > 0 {
        '+'
    } else {
        '-'
    }
}

fn row(e: &WeightEntry) -> String {
    let sigma = e.sigma.map_or("  ".to_string(), |s| format!("{} ", sign(s)));
    format!(
        "  ({}, {})  h = {:<8} tau {}  P_m {}  sigma {}",
        e.r,
        e.s,
        plain(&format_rational(&e.weight)),
        sign(e.tau),
        if e.sigma.is_some() { "yes" } else { "no " },
        sigma.trim_end()
    )
}

pub fn render_text(r: &FusionReport) -> String {
    let mut s = format!("m = {}, c = {}\n", r.m, plain(&r.central_charge));
    if let Some(p) = &r.product {
        s += &format!("({}, {}) x ({}, {}) =\n", p.left.r, p.left.s, p.right.r, p.right.s);
        for t in &p.terms {
            s += &row(t);
            s.push('\n');
        }
    }
    if let Some(g) = &r.grid {
        s += "irreducible modules:\n";
        for e in g {
            s += &row(e);
            s.push('\n');
        }
        s += &format!(
            "c = {} {} a highest weight\n",
            plain(&r.central_charge),
            if r.central_charge_is_weight { "is" } else { "is not" }
        );
    }
    if let Some(p) = &r.sector {
        s += "P_m:\n";
        for e in p {
            s += &row(e);
            s.push('\n');
        }
    }
    if let Some(q) = &r.weight_query {
        s += &format!("h = {} {}\n", plain(&q.weight), if q.exists { "occurs" } else { "does not occur" });
    }
    s
}
