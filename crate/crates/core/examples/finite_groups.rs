//! Built-in finite groups, subgroup closures and quotients.
//!
//! cargo run --example finite_groups

use grwalk::group::{parse_cayley_table, FiniteGroup, Group, GroupError};

fn main() -> Result<(), GroupError> {
    let s3 = FiniteGroup::symmetric(3)?;
    println!("S3 elements: {:?}", s3.labels());
    println!("element orders: {:?}", s3.order_statistics());

    let r = s3.element("(123)")?;
    let t = s3.element("(12)")?;
    println!("(123)·(12) = {}", s3.label(s3.mul(&r, &t)));
    println!("(123)^-1 = {}", s3.label(s3.inv(&r)));

    let a3 = s3.subgroup_generated([r]);
    println!("<(123)> is normal: {}", s3.is_normal(&a3));
    let closure = s3.normal_closure([t]);
    println!("normal closure of (12) has {} elements", closure.len());

    let (quotient, projection) = s3.quotient(&a3)?;
    println!("S3/A3 has labels {:?}", quotient.labels());
    for g in s3.elements() {
        println!("  {} -> {}", s3.label(g), quotient.label(projection.apply(g)?));
    }

    for group in [FiniteGroup::dihedral(4)?, FiniteGroup::quaternion()?, FiniteGroup::cyclic(6)?] {
        println!("order {}: {:?}", group.order(), group.order_statistics());
    }

    // round trip through the plain-text Cayley table format
    let text = FiniteGroup::cyclic(3)?.to_table_text();
    println!("C3 table:\n{text}");
    let parsed = parse_cayley_table(&text)?;
    println!("parsed order {}", parsed.order());
    Ok(())
}
