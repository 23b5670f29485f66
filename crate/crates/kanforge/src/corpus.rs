//! Canned inputs, addressable by id.

use crate::bisimplicial::vertical_pullback;
use crate::category::FinCategory;
use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::io::Document;
use crate::monoidal::Monoidal;
use crate::nerve::nerve_group;
use crate::nerve2::nerve_two_group;
use crate::segal::{default_shape, segal_nerve};
use crate::standard::{
    boundary_sub, circle, delta, horn_sub, restrict, simplex_mod_vertices, square_mod_vertical, suspension_square,
};

/// Every corpus id with a one-line description, in listing order.
pub const ENTRIES: &[(&str, &str)] = &[
    ("group_trivial", "the trivial group"),
    ("group_z2", "the cyclic group of order 2"),
    ("group_z3", "the cyclic group of order 3"),
    ("group_z4", "the cyclic group of order 4"),
    ("group_s3", "the symmetric group on 3 letters"),
    ("groupoid_z2", "Z/2 as a one-object groupoid"),
    ("groupoid_z3", "Z/3 as a one-object groupoid"),
    ("indiscrete2", "the indiscrete groupoid on 2 objects"),
    ("indiscrete3", "the indiscrete groupoid on 3 objects"),
    ("twogroup_trivial", "the trivial 2-group"),
    ("twogroup_disc_z2", "Disc(Z/2): objects Z/2, identity morphisms only"),
    ("twogroup_disc_z3", "Disc(Z/3)"),
    ("twogroup_disc_z4", "Disc(Z/4)"),
    ("twogroup_disc_s3", "Disc(S3)"),
    ("twogroup_oneobj_z2", "OneObj(Z/2): one object, morphisms Z/2"),
    ("twogroup_oneobj_z3", "OneObj(Z/3)"),
    ("twogroup_product", "Disc(Z/2) x OneObj(Z/2)"),
    ("delta0", "the standard 0-simplex, through level 3"),
    ("delta1", "the standard 1-simplex, through level 2"),
    ("delta2", "the standard 2-simplex, through level 3"),
    ("boundary_delta2", "the boundary of the 2-simplex, through level 3"),
    ("horn_2_1", "the horn of the 2-simplex missing face 1, through level 3"),
    ("circle", "the simplicial circle, through level 3"),
    ("delta2_mod_vertices", "the 2-simplex with its vertices collapsed, through level 3"),
    ("square_mod_vertical", "(Delta1 x Delta1)/(sq0 Delta1 x Delta1), through level 3"),
    ("prism_mod_vertical", "(Delta1 x Delta2)/(sq0 Delta1 x Delta2), through level 3"),
    ("nerve_z2", "the nerve of Z/2, through level 3"),
    ("tau2_nerve_z2", "the nerve of Z/2 through level 2, marked coskeletal at 2"),
    ("nerve_twogroup_oneobj_z2", "the nerve of OneObj(Z/2), through level 3"),
    ("segal_circle", "the Segal pre-monoid with the circle in every row, p + q <= 4"),
    ("segal_nerve_disc_z2", "the Segal nerve of Disc(Z/2), p + q <= 4"),
    ("segal_nerve_oneobj_z2", "the Segal nerve of OneObj(Z/2), p + q <= 4"),
];

/// The canned groups used across the checks.
pub fn group(id: &str) -> Option<FiniteGroup> {
    Some(match id {
        "trivial" => FiniteGroup::trivial(),
        "z2" => FiniteGroup::cyclic(2),
        "z3" => FiniteGroup::cyclic(3),
        "z4" => FiniteGroup::cyclic(4),
        "s3" => FiniteGroup::symmetric3(),
        _ => return None,
    })
}

/// Canned 2-groups by short name (`disc_z2`, `oneobj_z3`, `product`, ...).
pub fn two_group(id: &str) -> Option<Monoidal> {
    let z2 = FiniteGroup::cyclic(2);
    Some(match id {
        "trivial" => Monoidal::discrete(&FiniteGroup::trivial()),
        "product" => Monoidal::discrete(&z2).product(&Monoidal::one_object(&z2).expect("abelian")),
        _ => match id.strip_prefix("disc_") {
            Some(g) => Monoidal::discrete(&group(g)?),
            None => Monoidal::one_object(&group(id.strip_prefix("oneobj_")?)?).ok()?,
        },
    })
}

/// Short names of every canned 2-group.
pub const TWO_GROUPS: &[&str] =
    &["trivial", "disc_z2", "disc_z3", "disc_z4", "disc_s3", "oneobj_z2", "oneobj_z3", "product"];

/// Looks up a corpus entry.
pub fn get(id: &str) -> Result<Document> {
    let missing = || Error::Parse(format!("unknown corpus id {id:?}"));
    let doc = if let Some(g) = id.strip_prefix("group_") {
        Document::Group(group(g).ok_or_else(missing)?)
    } else if let Some(g) = id.strip_prefix("twogroup_") {
        Document::TwoGroup(two_group(g).ok_or_else(missing)?)
    } else {
        match id {
            "groupoid_z2" => Document::Category(FinCategory::from_group(&FiniteGroup::cyclic(2), "*")),
            "groupoid_z3" => Document::Category(FinCategory::from_group(&FiniteGroup::cyclic(3), "*")),
            "indiscrete2" => Document::Category(FinCategory::indiscrete(&["a", "b"])),
            "indiscrete3" => Document::Category(FinCategory::indiscrete(&["a", "b", "c"])),
            "delta0" => Document::SSet(delta(0, 3)),
            "delta1" => Document::SSet(delta(1, 2)),
            "delta2" => Document::SSet(delta(2, 3)),
            "boundary_delta2" => {
                let (d, sub) = boundary_sub(2, 3);
                Document::SSet(restrict(&d, &sub)?)
            }
            "horn_2_1" => {
                let (d, sub) = horn_sub(2, 1, 3)?;
                Document::SSet(restrict(&d, &sub)?)
            }
            "circle" => Document::SSet(circle(3)),
            "delta2_mod_vertices" => Document::SSet(simplex_mod_vertices(2, 3)),
            "square_mod_vertical" => Document::SSet(square_mod_vertical(3)),
            "prism_mod_vertical" => Document::SSet(suspension_square(2, 3)),
            "nerve_z2" => Document::SSet(nerve_group(&FiniteGroup::cyclic(2), 3)),
            "tau2_nerve_z2" => Document::SSet(nerve_group(&FiniteGroup::cyclic(2), 2)),
            "nerve_twogroup_oneobj_z2" => {
                Document::SSet(nerve_two_group(&two_group("oneobj_z2").expect("canned"), 3).sset)
            }
            "segal_circle" => Document::BiSSet(vertical_pullback(&circle(4), &default_shape())?),
            "segal_nerve_disc_z2" => {
                Document::BiSSet(segal_nerve(&two_group("disc_z2").expect("canned"), &default_shape())?)
            }
            "segal_nerve_oneobj_z2" => {
                Document::BiSSet(segal_nerve(&two_group("oneobj_z2").expect("canned"), &default_shape())?)
            }
            _ => return Err(missing()),
        }
    };
    Ok(doc)
}
