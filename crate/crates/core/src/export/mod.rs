//! Configuration output: JSON for any dimension, SVG drawings for 2 and 3.

mod json;
mod svg;

pub use json::{export_json, import_json};
pub use svg::{
    primitives, render_svg, LabelPlacement, Primitive, Projection, RenderSpec, ViewPoint,
};
