#!/usr/bin/env python3
# vim:ts=4:sw=4:softtabstop=4:smarttab:expandtab

# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at

#     http://www.apache.org/licenses/LICENSE-2.0

# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""
Rule based, lexicon driven sentiment scoring (the VADER method).

Each token gets its valence from the lexicon, adjusted by preceding boosters
and dampeners, negations, ALL-CAPS emphasis and a handful of idioms. Clauses
before a "but" are halved and those after it are raised by half. The sum,
plus any ! and ? emphasis, is normalized into [-1, 1] as x / sqrt(x*x + 15):
the compound score.

The compound is not rounded here. Reports round it to 4 places.
"""

from __future__ import annotations

__all__ = ['SentimentLexicon', 'SentimentAnalyzer', 'SentiText', 'normalize',
           'polarity_scores', 'sentiment_score', 'NEGATE',
           'BOOSTER_DICT', 'SPECIAL_CASES']

import functools
import logging
import math
import string
from typing import Dict, FrozenSet, List, Mapping, Optional

from .exceptions import DataFileError
from .resources import DEFAULT_FILES, data_path, read_tsv

logger = logging.getLogger(__name__)

# empirically derived mean sentiment intensity rating increase for booster words
B_INCR = 0.293
B_DECR = -0.293

# empirically derived mean sentiment intensity rating increase for
# using ALLCAPs to emphasize a word
C_INCR = 0.733
N_SCALAR = -0.74

ALPHA = 15

NEGATE = frozenset([
    "aint", "arent", "cannot", "cant", "couldnt", "darent", "didnt", "doesnt",
    "ain't", "aren't", "can't", "couldn't", "daren't", "didn't", "doesn't",
    "dont", "hadnt", "hasnt", "havent", "isnt", "mightnt", "mustnt", "neither",
    "don't", "hadn't", "hasn't", "haven't", "isn't", "mightn't", "mustn't",
    "neednt", "needn't", "never", "none", "nope", "nor", "not", "nothing", "nowhere",
    "oughtnt", "shant", "shouldnt", "uhuh", "wasnt", "werent",
    "oughtn't", "shan't", "shouldn't", "uh-uh", "wasn't", "weren't",
    "without", "wont", "wouldnt", "won't", "wouldn't", "rarely", "seldom", "despite",
])

# booster/dampener 'intensifiers' or 'degree adverbs'
BOOSTER_DICT = {
    "absolutely": B_INCR, "amazingly": B_INCR, "awfully": B_INCR,
    "completely": B_INCR, "considerable": B_INCR, "considerably": B_INCR,
    "decidedly": B_INCR, "deeply": B_INCR, "effing": B_INCR, "enormous": B_INCR,
    "enormously": B_INCR, "entirely": B_INCR, "especially": B_INCR,
    "exceptional": B_INCR, "exceptionally": B_INCR, "extreme": B_INCR,
    "extremely": B_INCR, "fabulously": B_INCR, "flipping": B_INCR, "flippin": B_INCR,
    "frackin": B_INCR, "fracking": B_INCR, "fricking": B_INCR, "frickin": B_INCR,
    "frigging": B_INCR, "friggin": B_INCR, "fully": B_INCR, "fuckin": B_INCR,
    "fucking": B_INCR, "fuggin": B_INCR, "fugging": B_INCR, "greatly": B_INCR,
    "hella": B_INCR, "highly": B_INCR, "hugely": B_INCR, "incredible": B_INCR,
    "incredibly": B_INCR, "intensely": B_INCR, "major": B_INCR, "majorly": B_INCR,
    "more": B_INCR, "most": B_INCR, "particularly": B_INCR, "purely": B_INCR,
    "quite": B_INCR, "really": B_INCR, "remarkably": B_INCR, "so": B_INCR,
    "substantially": B_INCR, "thoroughly": B_INCR, "total": B_INCR,
    "totally": B_INCR, "tremendous": B_INCR, "tremendously": B_INCR,
    "uber": B_INCR, "unbelievably": B_INCR, "unusually": B_INCR, "utter": B_INCR,
    "utterly": B_INCR, "very": B_INCR,
    "almost": B_DECR, "barely": B_DECR, "hardly": B_DECR, "just enough": B_DECR,
    "kind of": B_DECR, "kinda": B_DECR, "kindof": B_DECR, "kind-of": B_DECR,
    "less": B_DECR, "little": B_DECR, "marginal": B_DECR, "marginally": B_DECR,
    "occasional": B_DECR, "occasionally": B_DECR, "partly": B_DECR,
    "scarce": B_DECR, "scarcely": B_DECR, "slight": B_DECR, "slightly": B_DECR,
    "somewhat": B_DECR, "sort of": B_DECR, "sorta": B_DECR, "sortof": B_DECR,
    "sort-of": B_DECR,
}

# sentiment laden idioms and words whose meaning changes in a phrase
SPECIAL_CASES = {
    "the shit": 3, "the bomb": 3, "bad ass": 1.5, "badass": 1.5, "bus stop": 0.0,
    "yeah right": -2, "kiss of death": -1.5, "to die for": 3,
    "beating heart": 3.5, "broken heart": -2.9,
}


def normalize(score: float, alpha: float = ALPHA) -> float:
    """Normalize the score to be between -1 and 1 using an alpha that
    approximates the max expected value.
    """
    norm_score = score / math.sqrt((score * score) + alpha)
    if norm_score < -1.0:
        return -1.0
    if norm_score > 1.0:
        return 1.0
    return norm_score


def allcap_differential(words) -> bool:
    """True if some but not all of the words are ALL CAPS."""
    allcap_words = sum(1 for word in words if word.isupper())
    cap_differential = len(words) - allcap_words
    return 0 < cap_differential < len(words)


def scalar_inc_dec(word, valence, is_cap_diff, boosters=BOOSTER_DICT) -> float:
    """Check if the preceding words increase, decrease, or negate/nullify the
    valence.
    """
    scalar = 0.0
    word_lower = word.lower()
    if word_lower in boosters:
        scalar = boosters[word_lower]
        if valence < 0:
            scalar *= -1
        # check if booster/dampener word is in ALLCAPS (while others aren't)
        if word.isupper() and is_cap_diff:
            if valence > 0:
                scalar += C_INCR
            else:
                scalar -= C_INCR
    return scalar


class SentimentLexicon:
    """Token valences, plus the booster and negation tables. Unknown tokens
    have valence 0.
    """

    def __init__(self, valences: Mapping[str, float],
                 boosters: Optional[Mapping[str, float]] = None,
                 negations: Optional[FrozenSet[str]] = None):
        self.valences: Dict[str, float] = dict(valences)
        self.boosters = dict(BOOSTER_DICT if boosters is None else boosters)
        self.negations = frozenset(NEGATE if negations is None else negations)

    @classmethod
    def from_file(cls, path):
        """Read `token<TAB>mean valence[<TAB>...]` lines; extra columns are
        ignored.
        """
        valences = {}
        for lineno, fields in read_tsv(path, 2):
            token = fields[0].lower()
            if not token:
                raise DataFileError(path, "empty token", lineno)
            try:
                valences[token] = float(fields[1])
            except ValueError:
                raise DataFileError(path, "valence {!r} is not a number".format(
                    fields[1]), lineno) from None
        logger.debug("loaded %d sentiment lexicon entries from %s", len(valences), path)
        return cls(valences)

    def valence(self, token: str) -> float:
        return self.valences.get(token.lower(), 0.0)

    def __contains__(self, token):
        return token in self.valences

    def __len__(self):
        return len(self.valences)


class SentiText:
    """Identify sentiment-relevant string-level properties of input text."""

    def __init__(self, text: str):
        self.text = text
        self.words_and_emoticons = self._words_and_emoticons()
        # doesn't separate words from adjacent punctuation (keeps emoticons
        # and contractions)
        self.is_cap_diff = allcap_differential(self.words_and_emoticons)

    @staticmethod
    def _strip_punc_if_word(token):
        """Remove all leading and trailing punctuation, unless what is left
        has two characters or fewer (emoticons like :) or ;-) survive).
        """
        stripped = token.strip(string.punctuation)
        if len(stripped) <= 2:
            return token
        return stripped

    def _words_and_emoticons(self) -> List[str]:
        return [self._strip_punc_if_word(w) for w in self.text.split()]


class SentimentAnalyzer:
    """Give a sentiment intensity score to sentences and phrases."""

    def __init__(self, lexicon: SentimentLexicon):
        self.lexicon = lexicon
        self.valences = lexicon.valences
        self.boosters = lexicon.boosters

    def _negated(self, word) -> bool:
        word = word.lower()
        return word in self.lexicon.negations or "n't" in word

    def polarity_scores(self, text: str) -> Dict[str, float]:
        """Return a dict of neg, neu, pos proportions and the compound score.
        Positive compound means positive valence, negative means negative.
        """
        sentitext = SentiText(text)
        sentiments = []
        words_and_emoticons = sentitext.words_and_emoticons
        for i, item in enumerate(words_and_emoticons):
            valence = 0
            # modifiers and negations carry no valence of their own
            if item.lower() in self.boosters:
                sentiments.append(valence)
                continue
            if (i < len(words_and_emoticons) - 1 and item.lower() == "kind"
                    and words_and_emoticons[i + 1].lower() == "of"):
                sentiments.append(valence)
                continue
            sentiments = self.sentiment_valence(valence, sentitext, item, i, sentiments)
        sentiments = self._but_check(words_and_emoticons, sentiments)
        return self.score_valence(sentiments, text)

    def sentiment_score(self, text: str) -> float:
        return self.polarity_scores(text)["compound"]

    def sentiment_valence(self, valence, sentitext, item, i, sentiments):
        is_cap_diff = sentitext.is_cap_diff
        words_and_emoticons = sentitext.words_and_emoticons
        item_lowercase = item.lower()
        if item_lowercase in self.valences:
            valence = self.valences[item_lowercase]

            # "no" as negation of an adjacent lexicon item, not as its own item
            if (item_lowercase == "no" and i != len(words_and_emoticons) - 1
                    and words_and_emoticons[i + 1].lower() in self.valences):
                valence = 0.0
            if ((i > 0 and words_and_emoticons[i - 1].lower() == "no")
                    or (i > 1 and words_and_emoticons[i - 2].lower() == "no")
                    or (i > 2 and words_and_emoticons[i - 3].lower() == "no"
                        and words_and_emoticons[i - 1].lower() in ("or", "nor"))):
                valence = self.valences[item_lowercase] * N_SCALAR

            # sentiment laden word in ALL CAPS (while others aren't)
            if item.isupper() and is_cap_diff:
                if valence > 0:
                    valence += C_INCR
                else:
                    valence -= C_INCR

            for start_i in range(0, 3):
                # dampen the scalar modifier of preceding words by distance
                if (i > start_i
                        and words_and_emoticons[i - (start_i + 1)].lower() not in self.valences):
                    s = scalar_inc_dec(words_and_emoticons[i - (start_i + 1)], valence,
                                       is_cap_diff, self.boosters)
                    if start_i == 1 and s != 0:
                        s = s * 0.95
                    if start_i == 2 and s != 0:
                        s = s * 0.9
                    valence = valence + s
                    valence = self._negation_check(valence, words_and_emoticons, start_i, i)
                    if start_i == 2:
                        valence = self._special_idioms_check(valence, words_and_emoticons, i)

            valence = self._least_check(valence, words_and_emoticons, i)
        sentiments.append(valence)
        return sentiments

    def _least_check(self, valence, words_and_emoticons, i):
        # negation case using "least"
        if (i > 1 and words_and_emoticons[i - 1].lower() not in self.valences
                and words_and_emoticons[i - 1].lower() == "least"):
            if (words_and_emoticons[i - 2].lower() != "at"
                    and words_and_emoticons[i - 2].lower() != "very"):
                valence = valence * N_SCALAR
        elif (i > 0 and words_and_emoticons[i - 1].lower() not in self.valences
              and words_and_emoticons[i - 1].lower() == "least"):
            valence = valence * N_SCALAR
        return valence

    @staticmethod
    def _but_check(words_and_emoticons, sentiments):
        # contrastive conjunction: weight before "but" by 0.5, after by 1.5
        words_and_emoticons_lower = [str(w).lower() for w in words_and_emoticons]
        if "but" not in words_and_emoticons_lower:
            return sentiments
        bi = words_and_emoticons_lower.index("but")
        checked = []
        for si, sentiment in enumerate(sentiments):
            if si < bi:
                sentiment = sentiment * 0.5
            elif si > bi:
                sentiment = sentiment * 1.5
            checked.append(sentiment)
        return checked

    def _special_idioms_check(self, valence, words_and_emoticons, i):
        w = [str(word).lower() for word in words_and_emoticons]
        onezero = "{} {}".format(w[i - 1], w[i])
        twoonezero = "{} {} {}".format(w[i - 2], w[i - 1], w[i])
        twoone = "{} {}".format(w[i - 2], w[i - 1])
        threetwoone = "{} {} {}".format(w[i - 3], w[i - 2], w[i - 1])
        threetwo = "{} {}".format(w[i - 3], w[i - 2])

        for seq in (onezero, twoonezero, twoone, threetwoone, threetwo):
            if seq in SPECIAL_CASES:
                valence = SPECIAL_CASES[seq]
                break

        if len(w) - 1 > i:
            zeroone = "{} {}".format(w[i], w[i + 1])
            if zeroone in SPECIAL_CASES:
                valence = SPECIAL_CASES[zeroone]
        if len(w) - 1 > i + 1:
            zeroonetwo = "{} {} {}".format(w[i], w[i + 1], w[i + 2])
            if zeroonetwo in SPECIAL_CASES:
                valence = SPECIAL_CASES[zeroonetwo]

        # booster/dampener bi-grams such as 'sort of' or 'kind of'
        for n_gram in (threetwoone, threetwo, twoone):
            if n_gram in self.boosters:
                valence = valence + self.boosters[n_gram]
        return valence

    def _negation_check(self, valence, words_and_emoticons, start_i, i):
        w = [str(word).lower() for word in words_and_emoticons]
        if start_i == 0:
            # 1 word preceding lexicon word (w/o stopwords)
            if self._negated(w[i - 1]):
                valence = valence * N_SCALAR
        elif start_i == 1:
            if w[i - 2] == "never" and w[i - 1] in ("so", "this"):
                valence = valence * 1.25
            elif w[i - 2] == "without" and w[i - 1] == "doubt":
                pass
            elif self._negated(w[i - 2]):
                valence = valence * N_SCALAR
        elif start_i == 2:
            # "never so/this" two back, or "so/this" right before
            if ((w[i - 3] == "never" and w[i - 2] in ("so", "this"))
                    or w[i - 1] in ("so", "this")):
                valence = valence * 1.25
            elif w[i - 3] == "without" and "doubt" in (w[i - 2], w[i - 1]):
                pass
            elif self._negated(w[i - 3]):
                valence = valence * N_SCALAR
        return valence

    @staticmethod
    def _punctuation_emphasis(text):
        # add emphasis from exclamation points and question marks
        ep_amplifier = min(text.count("!"), 4) * 0.292
        qm_count = text.count("?")
        qm_amplifier = 0
        if qm_count > 1:
            qm_amplifier = qm_count * 0.18 if qm_count <= 3 else 0.96
        return ep_amplifier + qm_amplifier

    @staticmethod
    def _sift_sentiment_scores(sentiments):
        # separate positive versus negative sentiment scores
        pos_sum = 0.0
        neg_sum = 0.0
        neu_count = 0
        for sentiment_score in sentiments:
            if sentiment_score > 0:
                # compensates for neutral words that are counted as 1
                pos_sum += float(sentiment_score) + 1
            if sentiment_score < 0:
                neg_sum += float(sentiment_score) - 1
            if sentiment_score == 0:
                neu_count += 1
        return pos_sum, neg_sum, neu_count

    def score_valence(self, sentiments, text) -> Dict[str, float]:
        if not sentiments:
            return {"neg": 0.0, "neu": 0.0, "pos": 0.0, "compound": 0.0}
        sum_s = float(sum(sentiments))
        punct_emph_amplifier = self._punctuation_emphasis(text)
        if sum_s > 0:
            sum_s += punct_emph_amplifier
        elif sum_s < 0:
            sum_s -= punct_emph_amplifier
        compound = normalize(sum_s)

        pos_sum, neg_sum, neu_count = self._sift_sentiment_scores(sentiments)
        if pos_sum > math.fabs(neg_sum):
            pos_sum += punct_emph_amplifier
        elif pos_sum < math.fabs(neg_sum):
            neg_sum -= punct_emph_amplifier

        total = pos_sum + math.fabs(neg_sum) + neu_count
        return {
            "neg": round(math.fabs(neg_sum / total), 3),
            "neu": round(math.fabs(neu_count / total), 3),
            "pos": round(math.fabs(pos_sum / total), 3),
            "compound": compound,
        }


@functools.lru_cache(maxsize=None)
def _default_analyzer() -> SentimentAnalyzer:
    return SentimentAnalyzer(SentimentLexicon.from_file(data_path(DEFAULT_FILES["lexicon"])))


def _analyzer(lex):
    if lex is None:
        return _default_analyzer()
    return lex if isinstance(lex, SentimentAnalyzer) else SentimentAnalyzer(lex)


def polarity_scores(text: str, lex=None) -> Dict[str, float]:
    return _analyzer(lex).polarity_scores(text)


def sentiment_score(text: str, lex=None) -> float:
    """Compound score of *text* in [-1, 1], with the bundled lexicon unless
    a SentimentLexicon (or analyzer) is given. All unknown tokens give 0.0.
    """
    return _analyzer(lex).sentiment_score(text)

# vim:ts=4:sw=4:softtabstop=4:smarttab:expandtab
