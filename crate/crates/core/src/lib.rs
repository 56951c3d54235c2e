//! Retrieval-augmented translation toolkit for low-resource languages.
//!
//! The crate is organized around the translation chain: linguistic resources
//! are ingested into a document store ([`store`]), indexed for exact keyword
//! lookup and embedding similarity ([`retrieval`], [`embedding`]), folded into
//! a prompt ([`prompt`]), and sent to a completion backend ([`gateway`]).
//! Output quality is measured with BLEU, ROUGE, and an embedding-based score
//! ([`metrics`]). A self-contained low-rank adaptation lab ([`lora`]) covers
//! the parameter-efficient fine-tuning side on desk-scale matrices.
//!
//! Everything runs offline by default: the hashed-3-gram embedder and the
//! mock completion backend are deterministic, so whole-pipeline runs are
//! reproducible byte for byte. Remote HTTP providers can be swapped in
//! through configuration without touching call sites.

pub mod config;
pub mod embedding;
pub mod gateway;
pub mod lora;
pub mod metrics;
pub mod net;
pub mod pipeline;
pub mod prompt;
pub mod retrieval;
pub mod store;
pub mod text;

pub use config::PipelineConfig;
pub use embedding::{Embedder, EmbeddingError, EmbeddingVector, OfflineHashEmbedder};
pub use gateway::{
    BackendKind, CompletionBackend, GatewayError, MockBackend, RemoteBackend, TranslationRecord,
};
pub use lora::{LoraError, LowRankAdapter, Matrix, ToyAttentionLayer};
pub use metrics::{MetricReport, MetricsError, TokenSeq};
pub use pipeline::{Pipeline, StageError};
pub use prompt::{PromptBundle, PromptError, PromptTemplate};
pub use retrieval::{KeywordIndex, RetrievalError, RetrievalSet, VectorIndex};
pub use store::{Document, DocumentStore, GrammarNote, LexiconEntry, ParallelPair, StoreError};
