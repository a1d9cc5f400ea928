pub mod classes;
pub mod forms;

pub use classes::{
    form_space, invariant_forms, tensor_signature, total_signature, total_signature_with, z_summands, InvariantFormSpace,
    SignatureClass, SignatureLabel, TotalSignature,
};
pub use forms::{invariant_bilinear_forms, FormKind};
