"""Run configuration: tagset conventions, matcher options, thresholds.

A config file is plain `key = value` text; command-line flags override it.
Unknown keys are rejected so typos fail loudly.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace


@dataclass(frozen=True)
class Tagset:
    """Sejong-style tag classes, configurable for other analyzers."""
    adposition_prefix: str = 'J'
    noun_prefix: str = 'N'
    root_tag: str = 'XR'
    verbalizer_tag: str = 'XSV'
    verb_prefix: str = 'V'
    ending_prefix: str = 'E'
    tense_tag: str = 'EP'
    final_tag: str = 'EF'
    adnominal_tag: str = 'ETM'
    connective_tag: str = 'EC'
    adverb_tag: str = 'MAG'

    def is_adposition(self, tag: str) -> bool:
        return tag.startswith(self.adposition_prefix)

    def is_stem(self, tag: str) -> bool:
        return tag == self.root_tag or tag.startswith(self.noun_prefix)

    def is_verbalizer(self, tag: str) -> bool:
        return tag == self.verbalizer_tag or tag.startswith(self.verb_prefix)

    def is_ending(self, tag: str) -> bool:
        return tag.startswith(self.ending_prefix) and tag != self.tense_tag

    def is_tense(self, tag: str) -> bool:
        return tag == self.tense_tag

    def is_adverb(self, tag: str) -> bool:
        return tag == self.adverb_tag

    def is_noun(self, tag: str) -> bool:
        return tag.startswith(self.noun_prefix)

    def is_verbal(self, tag: str) -> bool:
        return tag.startswith(self.verb_prefix) or tag == self.verbalizer_tag


DEFAULT_PARTICLES = ('는', '도', '만')


@dataclass(frozen=True)
class Options:
    """Everything the pipeline stages accept beyond their inputs."""
    tagset: Tagset = field(default_factory=Tagset)
    trailing_particles: tuple[str, ...] = DEFAULT_PARTICLES
    strict: bool = False
    legal_register: bool = False
    non_hangul_form: str = 'lemma'  # allomorph for digit/Latin-final hosts
    theta_free: float = 0.8
    theta_fixed: int = 8
    rank_k: int = 300
    mwe_category: str = 'ADP'

    def validated(self) -> 'Options':
        if not 0.0 <= self.theta_free <= 1.0:
            raise ValueError(f"theta_free must be in [0,1], got {self.theta_free}")
        if self.theta_fixed < 0:
            raise ValueError(f"theta_fixed must be >= 0, got {self.theta_fixed}")
        if self.rank_k <= 0:
            raise ValueError(f"rank_k must be positive, got {self.rank_k}")
        if self.non_hangul_form not in ('lemma', 'alternate'):
            raise ValueError(
                f"non_hangul_form must be lemma or alternate, got {self.non_hangul_form!r}")
        return self


_BOOL_KEYS = {'strict', 'legal_register'}
_TAG_KEYS = {
    'tag_adposition_prefix': 'adposition_prefix',
    'tag_noun_prefix': 'noun_prefix',
    'tag_root': 'root_tag',
    'tag_verbalizer': 'verbalizer_tag',
    'tag_verb_prefix': 'verb_prefix',
    'tag_ending_prefix': 'ending_prefix',
    'tag_tense': 'tense_tag',
    'tag_final': 'final_tag',
    'tag_adnominal': 'adnominal_tag',
    'tag_connective': 'connective_tag',
    'tag_adverb': 'adverb_tag',
}


def _parse_bool(value: str, key: str) -> bool:
    if value in ('1', 'true', 'yes', 'on'):
        return True
    if value in ('0', 'false', 'no', 'off'):
        return False
    raise ValueError(f"bad boolean for {key}: {value!r}")


def apply_setting(options: Options, key: str, value: str) -> Options:
    """Apply one `key = value` setting; unknown keys raise."""
    key = key.strip()
    value = value.strip()
    if key in _BOOL_KEYS:
        return replace(options, **{key: _parse_bool(value, key)})
    if key == 'trailing_particles':
        particles = tuple(p.strip() for p in value.split(',') if p.strip())
        return replace(options, trailing_particles=particles)
    if key == 'theta_free':
        return replace(options, theta_free=float(value))
    if key == 'theta_fixed':
        return replace(options, theta_fixed=int(value))
    if key == 'rank_k':
        return replace(options, rank_k=int(value))
    if key == 'non_hangul_form':
        return replace(options, non_hangul_form=value)
    if key == 'mwe_category':
        return replace(options, mwe_category=value)
    if key in _TAG_KEYS:
        tagset = replace(options.tagset, **{_TAG_KEYS[key]: value})
        return replace(options, tagset=tagset)
    raise ValueError(f"unknown config key {key!r}")


def load_config(text: str, base: Options | None = None) -> Options:
    """Parse `key = value` lines; # starts a comment; blanks ignored."""
    options = base or Options()
    for lineno, line in enumerate(text.split('\n'), start=1):
        stripped = line.split('#', 1)[0].strip()
        if not stripped:
            continue
        key, sep, value = stripped.partition('=')
        if not sep:
            raise ValueError(f"config line {lineno}: expected key = value")
        try:
            options = apply_setting(options, key, value)
        except ValueError as exc:
            raise ValueError(f"config line {lineno}: {exc}") from None
    return options.validated()
