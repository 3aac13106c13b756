"""The example instances shipped with the package (``corpus/*.json``)."""

from importlib import resources

from .classify import load_instance

__all__ = ["corpus_names", "corpus_text", "load_corpus_instance", "load_corpus"]


def _directory():
    return resources.files(__package__).joinpath("corpus")


def corpus_names():
    return sorted(p.name[:-5] for p in _directory().iterdir() if p.name.endswith(".json"))


def corpus_text(name):
    return _directory().joinpath(f"{name}.json").read_text(encoding="utf-8")


def load_corpus_instance(name):
    if name not in corpus_names():
        raise KeyError(f"no corpus instance named {name!r}")
    return load_instance(corpus_text(name), f"corpus:{name}")


def load_corpus():
    return {name: load_corpus_instance(name) for name in corpus_names()}
