use fischer_lab::rational::{format_rational, parse_rational};
use fischer_lab::virasoro::{sakuma_lookup_inner, sakuma_record, sakuma_table, SakumaMatch, SakumaRecord};
use fischer_lab::Result;
use serde::Serialize;

use crate::args::SakumaArgs;
use crate::report::plain;

#[derive(Debug, Serialize)]
pub struct SakumaReport {
    pub ambiguous: bool,
    pub records: Vec<Row>,
}

#[derive(Debug, Serialize)]
pub struct Row {
    #[serde(flatten)]
    pub record: &'static SakumaRecord,
    pub inner_product: String,
}

fn row(record: &'static SakumaRecord) -> Row {
    Row { record, inner_product: format_rational(&record.inner_product()) }
}

pub fn run(args: &SakumaArgs) -> Result<SakumaReport> {
    let (ambiguous, records) = if let Some(tag) = &args.tag {
        (false, vec![sakuma_record(tag)?])
    } else if let Some(v) = &args.inner {
        match sakuma_lookup_inner(&parse_rational(v)?)? {
            SakumaMatch::Unique(r) => (false, vec![r]),
            SakumaMatch::Ambiguous(rs) => (true, rs),
        }
    } else {
        (false, sakuma_table().iter().collect())
    };
    Ok(SakumaReport { ambiguous, records: records.into_iter().map(row).collect() })
}

pub fn render_text(r: &SakumaReport) -> String {
    let mut s = String::new();
    if r.ambiguous {
        s += "ambiguous: the value matches several types\n";
    }
    s += "type  max|tau tau|  2^10(e|f)  (e|f)     dim  ising  miyamoto\n";
    for row in &r.records {
        let x = row.record;
        s += &format!(
            "{:<5} {:<12} {:<10} {:<9} {:<4} {:<6} {}\n",
            x.tag,
            x.max_tau_order,
            x.inner_product_times_1024,
            plain(&row.inner_product),
            x.griess_dim,
            x.ising_count,
            x.miyamoto_kind
        );
    }
    s
}
