"""Run configuration: a declarative INI file plus command-line overrides.

Schema (paths are resolved relative to the config file):

    [run]
    languages = es, ro          ; required, two or more supported codes
    seed = 42                   ; default 0, drives all sampling
    workers = 1                 ; default 1
    output_dir = out            ; default "out"
    max_occurrences = 200       ; contextual sampling cap per word

    [resources]
    lexicon = lexicon.tsv       ; related-word TSV (required)
    stopwords_dir = stopwords   ; <lang>.txt per language (required)
    corpus_dir = corpus         ; required
    corpus_name = toy           ; files <name>.<a>-<b>.<lang>.txt
    phonetic_lexicon = phon.tsv ; optional

    [static_embeddings]
    es = vectors/es.vec         ; word2vec text format per language

    [contextual_vectors]
    es-ro = ctx/es-ro.jsonl     ; JSON-lines per language pair (optional)

    [channels]
    surface = orthographic, phonetic
    semantic = static, contextual
"""

import configparser
from dataclasses import dataclass, field
from pathlib import Path

from .aggregate import SEMANTIC_CHANNELS, SURFACE_CHANNELS, ChannelConfig, channel_product
from .errors import ConfigurationError
from .langs import check_language, pair_slug


@dataclass
class RunConfig:
    languages: list[str]
    lexicon: Path
    stopwords_dir: Path
    corpus_dir: Path
    corpus_name: str
    output_dir: Path = Path("out")
    seed: int = 0
    workers: int = 1
    max_occurrences: int = 200
    static_embeddings: dict = field(default_factory=dict)
    contextual_vectors: dict = field(default_factory=dict)
    phonetic_lexicon: Path | None = None
    surface_channels: list = field(default_factory=lambda: ["orthographic"])
    semantic_channels: list = field(default_factory=lambda: ["static"])
    surface_explicit: bool = False
    semantic_explicit: bool = False

    def language_pairs(self):
        """All unordered pairs of configured languages, alphabetical."""
        langs = sorted(self.languages)
        return [(a, b) for i, a in enumerate(langs) for b in langs[i + 1:]]

    def corpus_paths(self, a: str, b: str):
        """Line-aligned corpus files for the unordered pair {a, b}."""
        slug = pair_slug(a, b)
        first, second = sorted((a, b))
        return (
            self.corpus_dir / f"{self.corpus_name}.{slug}.{first}.txt",
            self.corpus_dir / f"{self.corpus_name}.{slug}.{second}.txt",
        )

    def stopword_path(self, lang: str) -> Path:
        return self.stopwords_dir / f"{lang}.txt"


def _parse_list(raw: str) -> list[str]:
    return [item.strip() for item in raw.split(",") if item.strip()]


def load_run_config(path) -> RunConfig:
    """Parse and structurally validate a run-configuration file."""
    path = Path(path)
    if not path.is_file():
        raise ConfigurationError(f"config file not found: {path}")
    parser = configparser.ConfigParser(inline_comment_prefixes=(";", "#"))
    try:
        parser.read(path, encoding="utf-8")
    except configparser.Error as exc:
        raise ConfigurationError(f"cannot parse config {path}: {exc}") from None

    base = path.parent

    def _req(section, key):
        if not parser.has_option(section, key):
            raise ConfigurationError(f"{path}: missing [{section}] {key}")
        return parser.get(section, key)

    def _resolve(raw):
        return (base / Path(raw).expanduser()).resolve()

    languages = []
    for code in _parse_list(_req("run", "languages")):
        check_language(code)
        if code in languages:
            raise ConfigurationError(f"{path}: duplicate language {code!r}")
        languages.append(code)
    if len(languages) < 2:
        raise ConfigurationError(f"{path}: need at least two languages, got {languages}")

    config = RunConfig(
        languages=languages,
        lexicon=_resolve(_req("resources", "lexicon")),
        stopwords_dir=_resolve(_req("resources", "stopwords_dir")),
        corpus_dir=_resolve(_req("resources", "corpus_dir")),
        corpus_name=_req("resources", "corpus_name"),
        output_dir=_resolve(parser.get("run", "output_dir", fallback="out")),
        seed=parser.getint("run", "seed", fallback=0),
        workers=parser.getint("run", "workers", fallback=1),
        max_occurrences=parser.getint("run", "max_occurrences", fallback=200),
    )
    if config.workers < 1:
        raise ConfigurationError("workers must be >= 1")
    if config.max_occurrences < 1:
        raise ConfigurationError("max_occurrences must be >= 1")

    if parser.has_option("resources", "phonetic_lexicon"):
        config.phonetic_lexicon = _resolve(parser.get("resources", "phonetic_lexicon"))

    if parser.has_section("static_embeddings"):
        for lang, raw in parser.items("static_embeddings"):
            check_language(lang)
            config.static_embeddings[lang] = _resolve(raw)
    if parser.has_section("contextual_vectors"):
        for slug, raw in parser.items("contextual_vectors"):
            parts = slug.split("-")
            if len(parts) != 2 or pair_slug(*parts) != slug:
                raise ConfigurationError(f"{path}: bad language-pair key {slug!r}")
            config.contextual_vectors[slug] = _resolve(raw)

    if parser.has_option("channels", "surface"):
        config.surface_channels = _validated_channels(
            _parse_list(parser.get("channels", "surface")), SURFACE_CHANNELS, "surface")
    if parser.has_option("channels", "semantic"):
        config.semantic_channels = _validated_channels(
            _parse_list(parser.get("channels", "semantic")), SEMANTIC_CHANNELS, "semantic")
    return config


def _validated_channels(selected, known, kind):
    for name in selected:
        if name not in known:
            raise ConfigurationError(f"unknown {kind} channel {name!r} (known: {', '.join(known)})")
    if not selected:
        raise ConfigurationError(f"no {kind} channel selected")
    return list(dict.fromkeys(selected))


def apply_overrides(config: RunConfig, languages=None, seed=None, workers=None,
                    output_dir=None, surface=None, semantic=None) -> RunConfig:
    """Apply command-line overrides; flags win over the file."""
    if languages is not None:
        parsed = _parse_list(languages)
        for code in parsed:
            check_language(code)
            if code not in config.languages:
                raise ConfigurationError(f"language {code!r} not in the configured set")
        if len(parsed) < 2:
            raise ConfigurationError("need at least two languages")
        config.languages = parsed
    if seed is not None:
        config.seed = seed
    if workers is not None:
        if workers < 1:
            raise ConfigurationError("workers must be >= 1")
        config.workers = workers
    if output_dir is not None:
        config.output_dir = Path(output_dir).resolve()
    if surface is not None:
        config.surface_channels = _validated_channels(_parse_list(surface), SURFACE_CHANNELS, "surface")
        config.surface_explicit = True
    if semantic is not None:
        config.semantic_channels = _validated_channels(_parse_list(semantic), SEMANTIC_CHANNELS, "semantic")
        config.semantic_explicit = True
    return config


def resolve_channel_configs(config: RunConfig, warn=None) -> list[ChannelConfig]:
    """The channel configurations this run will compute.

    A phonetic selection without a phonetic lexicon is an error.  A
    contextual selection without any contextual-vector files degrades to
    the remaining semantic channels with a warning, unless the selection
    was made explicitly on the command line.
    """
    surface = list(config.surface_channels)
    semantic = list(config.semantic_channels)
    if "phonetic" in surface and config.phonetic_lexicon is None:
        raise ConfigurationError(
            "phonetic channel selected but no phonetic_lexicon configured")
    if "contextual" in semantic and not config.contextual_vectors:
        if config.semantic_explicit:
            raise ConfigurationError(
                "contextual channel selected but no contextual_vectors configured")
        semantic = [name for name in semantic if name != "contextual"]
        if warn is not None:
            warn("contextual channel unavailable (no contextual_vectors configured); skipping")
        if not semantic:
            raise ConfigurationError("no semantic channel left after dropping contextual")
    return channel_product(surface, semantic)


def check_resources(config: RunConfig, configs, need_corpus=True) -> None:
    """Fail fast (naming the missing path) before any expensive work."""
    missing = []
    if not config.lexicon.is_file():
        missing.append(f"lexicon: {config.lexicon}")
    if need_corpus:
        for lang in config.languages:
            if not config.stopword_path(lang).is_file():
                missing.append(f"stopwords[{lang}]: {config.stopword_path(lang)}")
        for a, b in config.language_pairs():
            for side_path in config.corpus_paths(a, b):
                if not side_path.is_file():
                    missing.append(f"corpus[{pair_slug(a, b)}]: {side_path}")
    surface = {c.surface for c in configs}
    semantic = {c.semantic for c in configs}
    if "phonetic" in surface:
        if config.phonetic_lexicon is None or not config.phonetic_lexicon.is_file():
            missing.append(f"phonetic_lexicon: {config.phonetic_lexicon}")
    if "static" in semantic:
        for lang in config.languages:
            vec = config.static_embeddings.get(lang)
            if vec is None or not vec.is_file():
                missing.append(f"static_embeddings[{lang}]: {vec}")
    if "contextual" in semantic:
        for a, b in config.language_pairs():
            slug = pair_slug(a, b)
            ctx = config.contextual_vectors.get(slug)
            if ctx is None or not ctx.is_file():
                missing.append(f"contextual_vectors[{slug}]: {ctx}")
    if missing:
        raise ConfigurationError("missing resources:\n  " + "\n  ".join(missing))
