//! Text in and out: expressions, structure files, and the example gallery.

mod format;
mod gallery;
mod load;
mod parse;

pub use format::{format_expr, format_in, format_with_factor_order, structure_factor_order};
pub use gallery::{gallery, GalleryEntry, Identity, GALLERY_NAMES};
pub use load::{load_structure, parse_structure, LoadOptions};
pub use parse::{parse_expr, ParseError};
