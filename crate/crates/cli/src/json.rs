//! Versioned JSON formats for subsets, collections, tilings and region
//! tilings. Every document carries `"format": 1`.

use serde::{Deserialize, Serialize};
use zonoweave_core::bruhat::{Region, RegionTiling};
use zonoweave_core::{Color, GTiling, GroundSize, Permutation, Subset, Tile, WsCollection};

use crate::error::CliError;

pub const FORMAT: u32 = 1;

pub fn subset_to_vec(x: Subset) -> Vec<usize> {
    x.to_vec()
}

pub fn subset_from_vec(v: &[usize]) -> Result<Subset, CliError> {
    Subset::from_elements(v.iter().copied()).map_err(|e| CliError::Schema(e.to_string()))
}

fn ground(n: usize) -> Result<GroundSize, CliError> {
    GroundSize::new(n).map_err(|e| CliError::Schema(e.to_string()))
}

fn check_format(format: u32) -> Result<(), CliError> {
    if format == FORMAT {
        Ok(())
    } else {
        Err(CliError::Schema(format!(
            "unsupported format {format}, expected {FORMAT}"
        )))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CollectionDoc {
    pub format: u32,
    pub n: usize,
    pub sets: Vec<Vec<usize>>,
}

impl CollectionDoc {
    pub fn from_collection(c: &WsCollection) -> Self {
        CollectionDoc {
            format: FORMAT,
            n: c.n().get(),
            sets: c.members().map(|&x| subset_to_vec(x)).collect(),
        }
    }

    /// Members are range-checked; weak separation is left to the caller.
    pub fn to_collection(&self) -> Result<WsCollection, CliError> {
        check_format(self.format)?;
        let sets = self
            .sets
            .iter()
            .map(|s| subset_from_vec(s))
            .collect::<Result<Vec<_>, _>>()?;
        WsCollection::new(ground(self.n)?, sets).map_err(|e| CliError::Schema(e.to_string()))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ColorDoc {
    White,
    Black,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TileDoc {
    pub base: Vec<usize>,
    pub i: usize,
    pub j: usize,
    pub color: ColorDoc,
}

impl TileDoc {
    pub fn from_tile(t: &Tile) -> Self {
        TileDoc {
            base: subset_to_vec(t.base()),
            i: t.i(),
            j: t.j(),
            color: match t.color() {
                Color::White => ColorDoc::White,
                Color::Black => ColorDoc::Black,
            },
        }
    }

    pub fn to_tile(&self) -> Result<Tile, CliError> {
        let color = match self.color {
            ColorDoc::White => Color::White,
            ColorDoc::Black => Color::Black,
        };
        Tile::new(subset_from_vec(&self.base)?, self.i, self.j, color)
            .map_err(|e| CliError::Schema(e.to_string()))
    }
}

/// A tiling of `Z_n`, or of a region when both paths are present.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TilingDoc {
    pub format: u32,
    pub n: usize,
    pub tiles: Vec<TileDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub left: Option<Vec<u8>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub right: Option<Vec<u8>>,
}

/// Either kind of tiling document, parsed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AnyTiling {
    Full(GTiling),
    Region(RegionTiling),
}

impl TilingDoc {
    pub fn from_tiling(t: &GTiling) -> Self {
        TilingDoc {
            format: FORMAT,
            n: t.n().get(),
            tiles: t.tiles().iter().map(TileDoc::from_tile).collect(),
            left: None,
            right: None,
        }
    }

    pub fn from_region(rt: &RegionTiling) -> Self {
        TilingDoc {
            format: FORMAT,
            n: rt.n().get(),
            tiles: rt.tiles().iter().map(TileDoc::from_tile).collect(),
            left: Some(rt.region().left().permutation().one_line().to_vec()),
            right: Some(rt.region().right().permutation().one_line().to_vec()),
        }
    }

    fn parse_tiles(&self) -> Result<Vec<Tile>, CliError> {
        self.tiles.iter().map(TileDoc::to_tile).collect()
    }

    pub fn to_any(&self) -> Result<AnyTiling, CliError> {
        check_format(self.format)?;
        let n = ground(self.n)?;
        let tiles = self.parse_tiles()?;
        match (&self.left, &self.right) {
            (None, None) => Ok(AnyTiling::Full(
                GTiling::new(n, tiles).map_err(|e| CliError::Schema(e.to_string()))?,
            )),
            (Some(l), Some(r)) => {
                let perm = |v: &[u8]| {
                    Permutation::from_one_line(v).map_err(|e| CliError::Schema(e.to_string()))
                };
                let (wp, w) = (perm(l)?, perm(r)?);
                if wp.n() != n || w.n() != n {
                    return Err(CliError::Schema("path length differs from n".into()));
                }
                for t in &tiles {
                    if t.j() > self.n || !t.base().fits(n) {
                        return Err(CliError::Schema(format!(
                            "tile {t} does not fit [{}]",
                            self.n
                        )));
                    }
                }
                let region = Region::new(&wp, &w).map_err(|e| CliError::Schema(e.to_string()))?;
                Ok(AnyTiling::Region(RegionTiling::new(region, tiles)))
            }
            _ => Err(CliError::Schema(
                "\"left\" and \"right\" must appear together".into(),
            )),
        }
    }

    pub fn to_tiling(&self) -> Result<GTiling, CliError> {
        match self.to_any()? {
            AnyTiling::Full(t) => Ok(t),
            AnyTiling::Region(_) => {
                Err(CliError::Schema("expected a tiling of the zonogon".into()))
            }
        }
    }
}

pub fn parse<T: for<'de> Deserialize<'de>>(text: &str) -> Result<T, CliError> {
    serde_json::from_str(text).map_err(|e| CliError::Schema(e.to_string()))
}

/// Compact JSON followed by a newline.
pub fn to_line<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string(value).expect("serializable");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn collection_round_trip() {
        let n = GroundSize::new(3).unwrap();
        let c = WsCollection::intervals(n);
        let doc = CollectionDoc::from_collection(&c);
        let text = to_line(&doc);
        assert!(text.starts_with("{\"format\":1,\"n\":3,\"sets\":[[],[1],[2],[3],[1,2]"));
        let back: CollectionDoc = parse(&text).unwrap();
        assert_eq!(back.to_collection().unwrap(), c);
    }

    #[test]
    fn rejects_bad_documents() {
        assert!(parse::<CollectionDoc>("{\"format\":1,\"n\":3}").is_err());
        let doc: CollectionDoc = parse("{\"format\":2,\"n\":3,\"sets\":[]}").unwrap();
        assert!(doc.to_collection().is_err());
        let doc: CollectionDoc = parse("{\"format\":1,\"n\":3,\"sets\":[[4]]}").unwrap();
        assert!(doc.to_collection().is_err());
        let doc: TilingDoc = parse(
            "{\"format\":1,\"n\":3,\"tiles\":[{\"base\":[1],\"i\":1,\"j\":2,\"color\":\"white\"}]}",
        )
        .unwrap();
        assert!(doc.to_tiling().is_err());
        let doc: TilingDoc = parse("{\"format\":1,\"n\":3,\"tiles\":[],\"left\":[1,2,3]}").unwrap();
        assert!(doc.to_any().is_err());
    }
}
