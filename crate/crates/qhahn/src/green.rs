//!. (under construction)
