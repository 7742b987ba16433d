use std::fmt;

/// Steps of the rational reasoning cycle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum RationalStep {
    ProcMsg,
    AffModB,
    EvalExp,
    SelEv,
    RelPl,
    ApplPl,
    SelAppPl,
    AddIm,
    SelInt,
    ExcInt,
    ClrInt,
}

impl RationalStep {
    pub const ALL: [RationalStep; 11] = [
        RationalStep::ProcMsg,
        RationalStep::AffModB,
        RationalStep::EvalExp,
        RationalStep::SelEv,
        RationalStep::RelPl,
        RationalStep::ApplPl,
        RationalStep::SelAppPl,
        RationalStep::AddIm,
        RationalStep::SelInt,
        RationalStep::ExcInt,
        RationalStep::ClrInt,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            RationalStep::ProcMsg => "ProcMsg",
            RationalStep::AffModB => "AffModB",
            RationalStep::EvalExp => "EvalExp",
            RationalStep::SelEv => "SelEv",
            RationalStep::RelPl => "RelPl",
            RationalStep::ApplPl => "ApplPl",
            RationalStep::SelAppPl => "SelAppPl",
            RationalStep::AddIm => "AddIM",
            RationalStep::SelInt => "SelInt",
            RationalStep::ExcInt => "ExcInt",
            RationalStep::ClrInt => "ClrInt",
        }
    }

    /// Lower-case spelling used in program text, e.g. `step(proc_msg)`.
    pub fn snake(&self) -> &'static str {
        match self {
            RationalStep::ProcMsg => "proc_msg",
            RationalStep::AffModB => "aff_mod_b",
            RationalStep::EvalExp => "eval_exp",
            RationalStep::SelEv => "sel_ev",
            RationalStep::RelPl => "rel_pl",
            RationalStep::ApplPl => "appl_pl",
            RationalStep::SelAppPl => "sel_app_pl",
            RationalStep::AddIm => "add_im",
            RationalStep::SelInt => "sel_int",
            RationalStep::ExcInt => "exc_int",
            RationalStep::ClrInt => "clr_int",
        }
    }

    pub fn from_snake(s: &str) -> Option<RationalStep> {
        Self::ALL.iter().copied().find(|st| st.snake() == s)
    }
}

impl fmt::Display for RationalStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}
