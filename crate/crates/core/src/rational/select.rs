use super::circumstance::Applicable;

pub const DEFAULT_RATIONALITY: f64 = 0.5;

/// Score of one option: `priority * rl` for plans from rational reasoning,
/// `priority * (1 - rl)` for affect-guarded ones.
pub fn plan_score(priority: f64, in_r: bool, rl: f64) -> f64 {
    if in_r {
        priority * rl
    } else {
        priority * (1.0 - rl)
    }
}

/// Index of the best option; ties go to the earliest in declaration order.
pub fn select_applicable_plan(options: &[Applicable], rl: f64) -> Option<usize> {
    let mut best: Option<(usize, usize, f64)> = None;
    for (i, o) in options.iter().enumerate() {
        if !o.in_r && !o.in_a {
            continue;
        }
        let s = plan_score(o.priority, o.in_r, rl);
        best = match best {
            Some((_, plan, bs)) if s < bs || (s == bs && plan <= o.plan) => best,
            _ => Some((i, o.plan, s)),
        };
    }
    best.map(|(i, _, _)| i)
}
