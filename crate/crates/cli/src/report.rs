//! Run reports serialized as JSON. Floats are written with 17
//! significant digits so values round-trip exactly.

use crate::io::format_float;

#[derive(Debug, Clone, Default)]
pub struct Report {
    pub algorithm: Option<String>,
    pub kernel: Option<String>,
    pub resolver: Option<String>,
    pub n: usize,
    pub nontrivial_mults: u64,
    pub trivial_mults: u64,
    pub adds: u64,
    pub max_abs_err: Option<f64>,
    pub rmse: Option<f64>,
    pub relative_rmse: Option<f64>,
    pub wall_time_ms: f64,
}

fn json_string(value: &Option<String>) -> String {
    match value {
        // Names are plain ASCII identifiers; no escaping is needed.
        Some(s) => format!("\"{s}\""),
        None => "null".into(),
    }
}

fn json_float(value: &Option<f64>) -> String {
    match value {
        Some(x) => format_float(*x),
        None => "null".into(),
    }
}

impl Report {
    pub fn to_json(&self) -> String {
        format!(
            concat!(
                "{{\n",
                "  \"algorithm\": {},\n",
                "  \"kernel\": {},\n",
                "  \"resolver\": {},\n",
                "  \"N\": {},\n",
                "  \"nontrivial_mults\": {},\n",
                "  \"trivial_mults\": {},\n",
                "  \"adds\": {},\n",
                "  \"max_abs_err\": {},\n",
                "  \"rmse\": {},\n",
                "  \"relative_rmse\": {},\n",
                "  \"wall_time_ms\": {}\n",
                "}}\n",
            ),
            json_string(&self.algorithm),
            json_string(&self.kernel),
            json_string(&self.resolver),
            self.n,
            self.nontrivial_mults,
            self.trivial_mults,
            self.adds,
            json_float(&self.max_abs_err),
            json_float(&self.rmse),
            json_float(&self.relative_rmse),
            format_float(self.wall_time_ms),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn renders_null_and_numbers() {
        let report = Report {
            algorithm: Some("aht-forward".into()),
            kernel: Some("hartley".into()),
            resolver: Some("ideal".into()),
            n: 8,
            nontrivial_mults: 0,
            trivial_mults: 3,
            adds: 40,
            max_abs_err: Some(1e-10),
            rmse: None,
            relative_rmse: None,
            wall_time_ms: 0.5,
        };
        let json = report.to_json();
        assert!(json.contains("\"algorithm\": \"aht-forward\""));
        assert!(json.contains("\"rmse\": null"));
        assert!(json.contains("\"N\": 8"));
        assert!(json.contains("\"max_abs_err\": 1.0000000000000000e-10"));
    }
}
