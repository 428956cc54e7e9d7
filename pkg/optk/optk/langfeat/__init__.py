from .text import tokenize, split_sentences
from .lm import LanguageModel, train_lm, perplexity_score
from .sentiment import SentimentLexicon, load_lexicon, sentiment_score
from .features import FeatureMatrix, frequency_score, length_score, pair_features, build_feature_matrix
