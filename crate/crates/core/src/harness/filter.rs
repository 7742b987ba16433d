//! `agent=<id>,rule=<name>` selection over trace records.

use crate::trace::TraceRecord;

/// Repeated keys widen the match (either value); different keys narrow it.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct TraceFilter {
    pub agents: Vec<String>,
    pub rules: Vec<String>,
}

impl TraceFilter {
    pub fn parse(spec: &str) -> Result<Self, String> {
        let mut f = TraceFilter::default();
        for part in spec.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            let (k, v) = part.split_once('=').ok_or_else(|| format!("filter term `{}` is not key=value", part))?;
            let v = v.trim();
            if v.is_empty() {
                return Err(format!("filter term `{}` has an empty value", part));
            }
            match k.trim() {
                "agent" => f.agents.push(v.to_string()),
                "rule" | "step" => f.rules.push(v.to_string()),
                other => return Err(format!("unknown filter key `{}` (expected agent or rule)", other)),
            }
        }
        Ok(f)
    }

    pub fn matches(&self, r: &TraceRecord) -> bool {
        (self.agents.is_empty() || self.agents.contains(&r.agent))
            && (self.rules.is_empty() || self.rules.contains(&r.step))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::trace::Cycle;
    use serde_json::json;

    #[test]
    fn keys_combine() {
        let f = TraceFilter::parse("agent=lily,rule=EmSel1,rule=AffAd1").unwrap();
        let rec = |a: &str, s: &str| TraceRecord::new(0, a, Cycle::Affective, s, json!({}));
        assert!(f.matches(&rec("lily", "EmSel1")));
        assert!(f.matches(&rec("lily", "AffAd1")));
        assert!(!f.matches(&rec("barney", "EmSel1")));
        assert!(!f.matches(&rec("lily", "SelEv")));
        assert!(TraceFilter::parse("").unwrap().matches(&rec("x", "y")));
        assert!(TraceFilter::parse("who=lily").is_err());
        assert!(TraceFilter::parse("agent").is_err());
    }
}
