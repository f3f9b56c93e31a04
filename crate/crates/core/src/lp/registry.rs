use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::Error;

macro_rules! symbols {
    ($($v:ident => $s:literal),* $(,)?) => {
        /// Counting variables of the relation system, in registry order.
        #[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
        pub enum Symbol { $($v),* }

        impl Symbol {
            pub const ALL: &'static [Symbol] = &[$(Symbol::$v),*];

            pub fn name(self) -> &'static str {
                match self { $(Symbol::$v => $s),* }
            }
        }
    };
}

symbols! {
    Omega => "Omega",
    OmegaSmall => "omega",
    E0 => "e0",
    F3 => "f3",
    G4 => "g4",
    S => "S",
    T => "T",
    S1 => "S1",
    S2 => "S2",
    S3 => "S3",
    S4p => "S4p",
    S21 => "S21",
    S22 => "S22",
    S31 => "S31",
    S32 => "S32",
    S41 => "S41",
    S42 => "S42",
    S1S => "S1_S",
    S1T => "S1_T",
    S1P0 => "S1_p0",
    S31SS => "S31_SS",
    S31TT => "S31_TT",
    S31ST => "S31_ST",
    S31SnfT => "S31_SnF_T",
    S31STnf => "S31_S_TnF",
    S32Snf => "S32_SnF",
    S32Tnf => "S32_TnF",
}

impl Symbol {
    pub fn index(self) -> usize {
        self as usize
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Symbol {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        Symbol::ALL
            .iter()
            .copied()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown symbol {s:?}")))
    }
}

impl Serialize for Symbol {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.name())
    }
}
