pub use lucie_core::probe;
