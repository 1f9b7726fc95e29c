//! File formats: graph6 and edge lists for simple graphs, a line-based
//! text format for voltage graphs, and DOT export for both.

mod dot;
mod edge_list;
mod graph6;
mod voltage_text;

pub use dot::{simple_graph_to_dot, voltage_graph_to_dot};
pub use edge_list::{read_edge_list, write_edge_list, EdgeListError};
pub use graph6::{read_graph6, write_graph6, Graph6Error};
pub use voltage_text::{read_voltage_graph, write_voltage_graph, VgParseError, VgParseErrorKind};
