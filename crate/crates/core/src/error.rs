use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("parameter out of domain: {0}")]
    ParameterDomain(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("malformed index: {0}")]
    MalformedIndex(String),
    #[error("empty subset not allowed for {0}")]
    EmptySubset(String),
    #[error("pole in parameters: {0}")]
    ParameterPole(String),
    #[error("contract violation: {0}")]
    ContractViolation(String),
}

pub type Result<T> = std::result::Result<T, Error>;
