pub(crate) mod bounds;
pub(crate) mod curve;
pub(crate) mod simulate;
pub(crate) mod spectrum;
pub(crate) mod verify;
