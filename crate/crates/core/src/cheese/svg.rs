//! Deterministic SVG snapshots of a cheese before and after
//! classicalisation: two panels, outer disc stroked, holes filled.
//! Coordinates are rendered with four fixed decimals (display rounding
//! only), viewbox derived from the original outer disc.

use std::fmt::Write;

use bigdecimal::BigDecimal;

use super::SwissCheese;
use crate::geo::plain_fixed;

fn f4(x: &BigDecimal) -> String {
    plain_fixed(x, 4)
}

fn panel(out: &mut String, cheese: &SwissCheese, dx: &BigDecimal, label: &str) {
    let cx = &cheese.outer.center.x + dx;
    writeln!(
        out,
        r##"  <g><circle cx="{}" cy="{}" r="{}" fill="none" stroke="#222" stroke-width="0.01"/>"##,
        f4(&cx),
        f4(&cheese.outer.center.y),
        f4(&cheese.outer.radius),
    )
    .unwrap();
    for h in &cheese.holes {
        let hx = &h.center.x + dx;
        writeln!(
            out,
            r##"    <circle cx="{}" cy="{}" r="{}" fill="#888"/>"##,
            f4(&hx),
            f4(&h.center.y),
            f4(&h.radius),
        )
        .unwrap();
    }
    writeln!(
        out,
        r##"    <text x="{}" y="{}" font-size="0.12" text-anchor="middle">{}</text></g>"##,
        f4(&cx),
        f4(&(&cheese.outer.center.y - &cheese.outer.radius - BigDecimal::from(1) / 8u8)),
        label,
    )
    .unwrap();
}

/// Side-by-side rendering; the viewbox is computed from the `before` outer
/// disc with a 10% pad.
pub fn render_before_after(before: &SwissCheese, after: &SwissCheese) -> String {
    let r = &before.outer.radius;
    let pad = r / 5u8;
    let width = (r + &pad).double().double();
    let min_x = &before.outer.center.x - r - &pad;
    let min_y = &before.outer.center.y - r - &pad;
    let height = (r + &pad).double();
    let shift = (r + &pad).double();
    let mut out = String::new();
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="{} {} {} {}">"#,
        f4(&min_x),
        f4(&min_y),
        f4(&width),
        f4(&height),
    )
    .unwrap();
    panel(&mut out, before, &BigDecimal::from(0), "before");
    panel(&mut out, after, &shift, "after");
    writeln!(out, "</svg>").unwrap();
    out
}
