pub mod census;
pub mod classify;
pub mod construct;
pub mod field;
pub mod flagmap;
pub mod report;
pub mod verify;
