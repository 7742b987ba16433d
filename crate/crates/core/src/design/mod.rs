//! Default realization of the appraisal, regulation, selection and
//! adaptation functions, behind the [`AffectiveDesign`] interface.

mod appraisal;
mod formulas;
mod table;

pub use appraisal::{derive_av, desirability, likelihood, Appraisal, AppraisalVariables, Concerns};
pub use formulas::{emotion_score, phi1, phi2, phi3, sel_emotion, update_al, Weighting, DEFAULT_AL_WEIGHT};
pub use table::{
    CauseGuard, EmotionTable, LikelihoodGuard, SignGuard, TableError, TableRow, DEFAULT_EMOTION_TABLE,
    DEFAULT_EMPATHIC_TABLE,
};

use crate::affect::{AffectError, AffectVector, Emotion, PrototypeTable};
use crate::terms::{Atom, TriggeringEvent};

/// The functions the affective cycle calls. Replace any of them to plug in
/// a different appraisal theory or regulation model.
pub trait AffectiveDesign: Send + Sync {
    fn prototypes(&self) -> &PrototypeTable;

    fn derive_av(&self, te: &TriggeringEvent, self_id: Atom, concerns: Concerns) -> Appraisal {
        derive_av(te, self_id, concerns)
    }

    fn derive_em(&self, av: &AppraisalVariables) -> Result<Vec<Emotion>, AffectError>;

    fn derive_emph_em(&self, av: &AppraisalVariables) -> Result<Vec<Emotion>, AffectError>;

    fn regulate(&self, w: Weighting, mood: &AffectVector, e: &AffectVector) -> Result<AffectVector, AffectError> {
        phi1(w, mood, e)
    }

    fn regulate_empathic(
        &self,
        w: Weighting,
        mood: &AffectVector,
        e: &AffectVector,
        al: f64,
    ) -> Result<AffectVector, AffectError> {
        phi2(w, mood, e, al)
    }

    fn select(&self, ae: &[Emotion], ee: &[Emotion]) -> Option<(usize, Emotion)> {
        sel_emotion(ae, ee, self.prototypes())
    }

    fn adapt(&self, w: Weighting, fe: &AffectVector, mood: &AffectVector) -> Result<AffectVector, AffectError> {
        phi3(w, fe, mood)
    }

    fn update_al(&self, al: f64, iv: f64) -> f64;
}

#[derive(Debug, Clone)]
pub struct DefaultDesign {
    pub prototypes: PrototypeTable,
    pub emotions: EmotionTable,
    pub empathic: EmotionTable,
    pub al_weight: f64,
}

impl Default for DefaultDesign {
    fn default() -> Self {
        DefaultDesign {
            prototypes: PrototypeTable::default_table(),
            emotions: EmotionTable::default_emotions(),
            empathic: EmotionTable::default_empathic(),
            al_weight: DEFAULT_AL_WEIGHT,
        }
    }
}

impl AffectiveDesign for DefaultDesign {
    fn prototypes(&self) -> &PrototypeTable {
        &self.prototypes
    }

    fn derive_em(&self, av: &AppraisalVariables) -> Result<Vec<Emotion>, AffectError> {
        self.emotions.derive(av, &self.prototypes)
    }

    fn derive_emph_em(&self, av: &AppraisalVariables) -> Result<Vec<Emotion>, AffectError> {
        self.empathic.derive(av, &self.prototypes)
    }

    fn update_al(&self, al: f64, iv: f64) -> f64 {
        update_al(al, iv, self.al_weight)
    }
}
