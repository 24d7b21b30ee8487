use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("domain mismatch in {context}: expected {expected}, found {found}")]
    DomainMismatch {
        context: &'static str,
        expected: String,
        found: String,
    },
    #[error("instance mismatch: {0} vs {1}")]
    InstanceMismatch(String, String),
    #[error("instance {instance} lacks capability `{capability}`")]
    CapabilityMissing {
        instance: String,
        capability: &'static str,
    },
    #[error("not an endomorphism: {source_obj} -> {target_obj}")]
    NotEndo {
        source_obj: String,
        target_obj: String,
    },
    #[error("not a bordism: {0}")]
    NotBordism(String),
    #[error("non-integer length {0} in exact field theory")]
    NonIntegerLength(String),
    #[error("invalid value: {0}")]
    Invalid(String),
}

impl Error {
    pub(crate) fn domain(
        context: &'static str,
        expected: impl ToString,
        found: impl ToString,
    ) -> Self {
        Error::DomainMismatch {
            context,
            expected: expected.to_string(),
            found: found.to_string(),
        }
    }

    pub(crate) fn missing(instance: impl ToString, capability: &'static str) -> Self {
        Error::CapabilityMissing {
            instance: instance.to_string(),
            capability,
        }
    }
}
