//! Reference topology of real del Pezzo surfaces of degrees 1 and 2 as
//! double covers, indexed by the real locus of the branch curve. Labels only.

/// Branch curve: a big circle and `ovals` ovals on a quadric cone.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BertiniRow {
    pub ovals: usize,
    pub s_plus: &'static str,
    pub s_minus: &'static str,
}

/// Branch curve: a plane quartic with the given real locus.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GeiserRow {
    pub quartic: &'static str,
    pub s_plus: &'static str,
    pub s_minus: &'static str,
}

pub fn bertini_table() -> &'static [BertiniRow] {
    const ROWS: [BertiniRow; 5] = [
        BertiniRow { ovals: 0, s_plus: "RP2", s_minus: "RP2" },
        BertiniRow { ovals: 1, s_plus: "RP2 + S2", s_minus: "#3 RP2" },
        BertiniRow { ovals: 2, s_plus: "RP2 + 2 S2", s_minus: "#5 RP2" },
        BertiniRow { ovals: 3, s_plus: "RP2 + 3 S2", s_minus: "#7 RP2" },
        BertiniRow { ovals: 4, s_plus: "RP2 + 4 S2", s_minus: "#9 RP2" },
    ];
    &ROWS
}

pub fn geiser_table() -> &'static [GeiserRow] {
    const ROWS: [GeiserRow; 6] = [
        GeiserRow { quartic: "empty", s_plus: "empty", s_minus: "RP2 + RP2" },
        GeiserRow { quartic: "1 oval", s_plus: "S2", s_minus: "#2 RP2" },
        GeiserRow { quartic: "2 non-nested ovals", s_plus: "S2 + S2", s_minus: "#4 RP2" },
        GeiserRow { quartic: "2 nested ovals", s_plus: "S1 x S1", s_minus: "S2 + #2 RP2" },
        GeiserRow { quartic: "3 ovals", s_plus: "3 S2", s_minus: "#6 RP2" },
        GeiserRow { quartic: "4 ovals", s_plus: "4 S2", s_minus: "#8 RP2" },
    ];
    &ROWS
}
