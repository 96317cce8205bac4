//! Ingestion service and its operator commands.

use std::path::PathBuf;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use sharelm::config::ServerConfig;
use sharelm::core::ingest::{review_quarantined, ConversationRepository, ReviewDecision, StoredStatus};
use sharelm::server::{router, AppState};
use sharelm::sqlite::SqliteRepository;

#[derive(Parser)]
#[command(about = "ShareLM ingestion service")]
struct Cli {
    /// TOML config; SHARELM_* environment variables override it.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    #[command(subcommand)]
    command: Option<Command>,
}

#[derive(Subcommand)]
enum Command {
    /// Operator commands against the store.
    Admin {
        #[command(subcommand)]
        command: Admin,
    },
}

#[derive(Subcommand)]
enum Admin {
    /// Without --id lists quarantined conversations; with --id applies a
    /// decision to one of them.
    Review {
        #[arg(long, requires = "decision")]
        id: Option<String>,
        #[arg(long, value_enum)]
        decision: Option<Decision>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Decision {
    Restore,
    Remove,
}

fn review(config: &ServerConfig, id: Option<String>, decision: Option<Decision>) -> Result<()> {
    let mut repo = SqliteRepository::open(&config.store_path)?;
    match (id, decision) {
        (Some(id), Some(decision)) => {
            let decision = match decision {
                Decision::Restore => ReviewDecision::Restore,
                Decision::Remove => ReviewDecision::Remove,
            };
            if review_quarantined(&mut repo, &id, decision)? {
                println!("{id}: {decision:?}");
            } else {
                anyhow::bail!("{id} is not quarantined");
            }
        }
        _ => {
            for row in repo.with_status(StoredStatus::Quarantined)? {
                let preview = row
                    .record
                    .as_ref()
                    .and_then(|r| r.conversation.first())
                    .map(|m| m.text.chars().take(80).collect::<String>())
                    .unwrap_or_default();
                println!("{}\t{}\t{}", row.conversation_id, row.received_at.to_rfc3339(), preview);
            }
        }
    }
    Ok(())
}

#[tokio::main]
async fn main() -> Result<()> {
    tracing_subscriber::fmt()
        .with_env_filter(
            tracing_subscriber::EnvFilter::try_from_default_env().unwrap_or_else(|_| "info".into()),
        )
        .init();
    let cli = Cli::parse();
    let config = ServerConfig::load(cli.config.as_deref())?;
    if let Some(Command::Admin { command: Admin::Review { id, decision } }) = cli.command {
        return review(&config, id, decision);
    }

    let repo = SqliteRepository::open(&config.store_path)
        .with_context(|| format!("opening {}", config.store_path.display()))?;
    if config.operator_token.is_none() {
        tracing::warn!("no operator token configured; release export is disabled");
    }
    let state = AppState::new(Box::new(repo), config.limits(), config.release_dir.clone())
        .with_operator_token(config.operator_token.clone());
    let listener = tokio::net::TcpListener::bind(&config.listen)
        .await
        .with_context(|| format!("binding {}", config.listen))?;
    tracing::info!(addr = %config.listen, store = %config.store_path.display(), "listening");
    axum::serve(listener, router(state))
        .with_graceful_shutdown(async {
            let _ = tokio::signal::ctrl_c().await;
        })
        .await?;
    Ok(())
}
