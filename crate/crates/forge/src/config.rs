use std::path::PathBuf;

use scheme_forge_core::domain::DomainKind;
use scheme_forge_core::field::prime_power;
use scheme_forge_core::{Field, FieldSpec, GroupId};

use crate::error::{ForgeError, Result};

/// Largest `q` accepted without `--allow-large`. Ω has q(q+1)/2 points and
/// the relation matrix is dense, so memory grows like q^4.
pub const DEFAULT_MAX_Q: u64 = 127;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, clap::ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Json,
    Csv,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunConfig {
    pub q: u64,
    pub group: GroupId,
    pub domain: DomainKind,
    pub modulus: Option<Vec<u32>>,
    pub out: Option<PathBuf>,
    pub format: Format,
    pub exhaustive: bool,
    pub deep: bool,
    pub p_tensor: bool,
    pub allow_large: bool,
}

impl RunConfig {
    pub fn new(q: u64, group: GroupId, domain: DomainKind) -> Self {
        RunConfig {
            q,
            group,
            domain,
            modulus: None,
            out: None,
            format: Format::Text,
            exhaustive: false,
            deep: false,
            p_tensor: false,
            allow_large: false,
        }
    }

    /// The field, after checking `q`, the modulus and the group.
    pub fn field(&self) -> Result<Field> {
        let f = field_for(self.q, self.modulus.as_deref(), self.allow_large)?;
        if !self.group.is_defined_for(&f) {
            return Err(ForgeError::Usage(format!(
                "{} needs q to be an even power of an odd prime, got q = {}",
                self.group, self.q
            )));
        }
        if self.exhaustive && self.q > 13 && !self.allow_large {
            return Err(ForgeError::Usage(format!(
                "--exhaustive checks every pair and is limited to q <= 13 (got q = {}); pass --allow-large to force it",
                self.q
            )));
        }
        Ok(f)
    }
}

pub fn field_for(q: u64, modulus: Option<&[u32]>, allow_large: bool) -> Result<Field> {
    match prime_power(q) {
        Some((p, _)) if p != 2 && q >= 5 => {}
        _ => return Err(ForgeError::Usage(format!("q must be an odd prime power >= 5, got {q}"))),
    }
    if q > DEFAULT_MAX_Q && !allow_large {
        return Err(ForgeError::Usage(format!(
            "q = {q} is above the default limit of {DEFAULT_MAX_Q}; pass --allow-large to build it anyway"
        )));
    }
    Ok(Field::new(FieldSpec::with_override(q, modulus)?))
}

/// Parses `1,0,2,1` style coefficient lists, constant term first.
pub fn parse_modulus(s: &str) -> std::result::Result<Vec<u32>, String> {
    s.split(',').map(|c| c.trim().parse::<u32>().map_err(|e| format!("bad coefficient {c:?}: {e}"))).collect()
}

/// A `--modulus` value; a newtype so clap treats it as one argument.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Modulus(pub Vec<u32>);

impl std::str::FromStr for Modulus {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        parse_modulus(s).map(Modulus)
    }
}

pub fn parse_group(s: &str) -> std::result::Result<GroupId, String> {
    GroupId::from_token(s).ok_or_else(|| format!("unknown group {s:?} (expected pgl, psl, m or pgammal)"))
}

pub fn parse_domain(s: &str) -> std::result::Result<DomainKind, String> {
    DomainKind::from_token(s).ok_or_else(|| {
        let names: Vec<&str> = DomainKind::ALL.iter().map(|d| d.token()).collect();
        format!("unknown domain {s:?} (expected one of {})", names.join(", "))
    })
}
