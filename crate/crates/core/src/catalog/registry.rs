use std::collections::BTreeMap;

use crate::error::{Error, Result};

use super::families::*;
use super::CatalogEntry;

/// Parameters of a key such as `su(1,1|1,1)`: groups split on `|`, items on `,`.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct Args {
    pub groups: Vec<Vec<String>>,
}

impl Args {
    pub fn parse(s: &str) -> Args {
        let s = s.trim();
        if s.is_empty() {
            return Args::default();
        }
        Args { groups: s.split('|').map(|g| g.split(',').map(|x| x.trim().to_string()).collect()).collect() }
    }

    pub fn single_int(&self) -> Result<usize> {
        match self.groups.as_slice() {
            [g] if g.len() == 1 => g[0].parse().map_err(|_| Error::InvalidInput(format!("expected an integer, got `{}`", g[0]))),
            _ => Err(Error::InvalidInput("expected a single integer parameter".into())),
        }
    }

    /// `(p,q)` or `(n)` read as `(n,0)`.
    pub fn pair_or_single(&self) -> Result<(usize, usize)> {
        let num = |s: &String| s.parse::<usize>().map_err(|_| Error::InvalidInput(format!("expected an integer, got `{s}`")));
        match self.groups.as_slice() {
            [g] if g.len() == 1 => Ok((num(&g[0])?, 0)),
            [g] if g.len() == 2 => Ok((num(&g[0])?, num(&g[1])?)),
            _ => Err(Error::InvalidInput("expected (p,q) or (n)".into())),
        }
    }
}

pub trait Family: Send + Sync {
    fn name(&self) -> &'static str;
    fn synopsis(&self) -> &'static str;
    fn examples(&self) -> Vec<&'static str>;
    fn build(&self, args: &Args) -> Result<CatalogEntry>;
}

/// Split `name(params)` or `name:params` into its parts.
pub fn split_key(key: &str) -> Result<(&str, Args)> {
    let key = key.trim();
    if let Some(open) = key.find('(') {
        let inner = key[open + 1..]
            .strip_suffix(')')
            .ok_or_else(|| Error::InvalidInput(format!("unbalanced parentheses in `{key}`")))?;
        Ok((&key[..open], Args::parse(inner)))
    } else if let Some((name, params)) = key.split_once(':') {
        Ok((name, Args::parse(params)))
    } else {
        Ok((key, Args::default()))
    }
}

pub struct Registry {
    families: BTreeMap<&'static str, Box<dyn Family>>,
}

impl Registry {
    pub fn empty() -> Registry {
        Registry { families: BTreeMap::new() }
    }

    pub fn standard() -> Registry {
        let mut r = Registry::empty();
        r.register(Box::new(Heisenberg));
        r.register(Box::new(Clifford));
        r.register(Box::new(HeisenbergClifford));
        r.register(Box::new(SpecialUnitary));
        r.register(Box::new(Unitary));
        r.register(Box::new(Orthosymplectic));
        r.register(Box::new(SpecialLinear));
        r.register(Box::new(GeneralLinear));
        r.register(Box::new(QueerUnitary));
        r.register(Box::new(QBar));
        r.register(Box::new(UP));
        r.register(Box::new(N3Super));
        r.register(Box::new(Abelian));
        r
    }

    pub fn register(&mut self, f: Box<dyn Family>) {
        self.families.insert(f.name(), f);
    }

    pub fn families(&self) -> impl Iterator<Item = &dyn Family> {
        self.families.values().map(|f| f.as_ref())
    }

    pub fn get(&self, name: &str) -> Option<&dyn Family> {
        self.families.get(name).map(|f| f.as_ref())
    }

    pub fn build(&self, key: &str) -> Result<CatalogEntry> {
        let (name, args) = split_key(key)?;
        let fam = self.get(name).ok_or_else(|| Error::UnknownCatalog(key.to_string()))?;
        fam.build(&args)
    }

    /// Every family's example keys, in registry order.
    pub fn example_keys(&self) -> Vec<&'static str> {
        self.families().flat_map(|f| f.examples()).collect()
    }
}

/// The entries exercised by the axiom suite.
pub const STANDARD_KEYS: &[&str] = &[
    "h(1)",
    "cl(1|1,+)",
    "cl(1|1,-)",
    "cl(1|2,++)",
    "cl(1|2,+-)",
    "cl(1|3,+++)",
    "cl(1|3,+-+)",
    "cl(1|4,++++)",
    "cl(1|4,++--)",
    "hc(2|2,++)",
    "hc(2|2,+-)",
    "su(2)",
    "su(2|1)",
    "su(1,1|1,1)",
    "sq(1,1)",
    "osp(1|2)",
    "osp(1,1|2)",
    "gl(1|1)",
    "sl(2,R)",
    "sl(2,C)",
    "u(1,1)",
    "n3super",
];

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn key_syntax() {
        let (n, a) = split_key("su(1,1|1,1)").unwrap();
        assert_eq!(n, "su");
        assert_eq!(a.groups, vec![vec!["1", "1"], vec!["1", "1"]]);
        let (n, a) = split_key("cl:1|2,+-").unwrap();
        assert_eq!(n, "cl");
        assert_eq!(a.groups, vec![vec!["1"], vec!["2", "+-"]]);
        assert_eq!(split_key("n3super").unwrap().1, Args::default());
        assert!(split_key("su(2").is_err());
    }

    #[test]
    fn unknown_family() {
        let e = Registry::standard().build("e8(1)").err().unwrap();
        assert_eq!(e.code(), "UNKNOWN_CATALOG_ENTRY");
        assert_eq!(e.exit_code(), 1);
    }
}
