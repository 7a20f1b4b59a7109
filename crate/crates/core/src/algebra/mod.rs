//! Query operators over concept graphs.

pub mod expr;
pub mod predicate;
pub mod project;
pub mod select;

pub use expr::{format_predicate, parse_predicate};
pub use predicate::{
    a_equivalent, classify, commutes, evaluate, o_equivalent, Monotonicity, Predicate,
};
pub use project::{
    project_attrs, project_attrs_with, project_objs, project_objs_with, Projection,
    ProjectionReport,
};
pub use select::{select, select_with, Selection, Strategy};
