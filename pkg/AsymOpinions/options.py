import optk

COMMANDS = [
    ('ingest', 'parse a corpus and keep the mutual interrelationships of one domain'),
    ('features', 'frequency, length, quality and sentiment per ordered pair'),
    ('normalize', 'remove language habits and compute asymmetry degrees'),
    ('structure', 'degree, clustering coefficient and embeddedness of the interaction graph'),
    ('balance', 'balance curve of one feature under a threshold sweep'),
    ('correlate', 'Pearson correlation of structure and asymmetry, binned curves'),
    ('export', 'annotated interaction graph as GraphViz dot'),
    ('simulate', 'Monte-Carlo check of the random balance baselines (needs --seed)'),
    ('all', 'run every stage into the output directory'),
]


def build_parser():
    parser = optk.HierarchyArgmentParser(prog='run_asymmetry.py',
                                         description='Asymmetric opinions on social interrelationships',
                                         version=optk.__version__)
    for name, help in COMMANDS:
        parser.add_command(name, help)

    # Experiment arguments
    exp_args = parser.add_parser("experiment")
    exp_args.add_argument('-o', '--output-dir', type=str, default='results',
                          help='directory for the artifacts of `all` and for default stage inputs')
    exp_args.add_argument('--out', type=str, default=None,
                          help='output file of a single stage')
    exp_args.add_argument('-s', '--seed', type=int, default=None,
                          help='random seed, required by simulate')
    exp_args.add_argument('-t', '--num-thread', type=int, default=1,
                          help='number of worker processes for parsing and features')
    exp_args.add_argument('--strict', action='store_true',
                          help='abort on the first malformed input record')
    exp_args.add_argument('--log-file', type=str, default=None,
                          help='also write the log to this file')
    exp_args.add_argument('-v', '--verbose', action='store_true',
                          help='debug logging')
    exp_args.add_argument('--plots', action='store_true',
                          help='write PNG plots of the curves')

    # Corpus arguments
    corpus_args = parser.add_parser("corpus")
    corpus_args.add_argument('-i', '--input', type=str, default=None,
                             help='raw corpus: a JSON Lines file or a maildir root')
    corpus_args.add_argument('--format', type=str, default='jsonl', choices=['jsonl', 'maildir'],
                             help='jsonl | maildir')
    corpus_args.add_argument('--domain-suffix', type=str, default='',
                             help='address suffix of the studied domain, e.g. @enron.com')
    corpus_args.add_argument('--min-bidirectional', type=int, default=15,
                             help='messages needed in each direction to keep a pair')
    corpus_args.add_argument('--recipient-fields', type=str, default='to,cc',
                             help='maildir headers read as recipients, comma separated')
    corpus_args.add_argument('--corpus', dest='corpus_path', type=str, default=None,
                             help='filtered corpus (JSON Lines) read by features and structure')

    # Language feature arguments
    lang_args = parser.add_parser("langfeat")
    lang_args.add_argument('--lexicon', type=str, default=None,
                           help='sentiment lexicon, word<TAB>polarity per line')
    lang_args.add_argument('--lm-order', type=int, default=3,
                           help='n-gram order of the language model')
    lang_args.add_argument('--lm-k', type=float, default=0.1,
                           help='add-k smoothing constant')
    lang_args.add_argument('--lm-min-count', type=int, default=2,
                           help='minimum count of a vocabulary word')
    lang_args.add_argument('--features', dest='features_path', type=str, default=None,
                           help='feature table read by normalize')

    # Balance arguments
    balance_args = parser.add_parser("balance")
    balance_args.add_argument('--normalized', dest='normalized_path', type=str, default=None,
                              help='normalized table read by balance, correlate and export')
    balance_args.add_argument('--mode', type=str, default='traditional', choices=list(optk.balance.MODES),
                              help='traditional | extended')
    balance_args.add_argument('--feature', type=str, default='length', choices=list(optk.FEATURES),
                              help='language feature of balance and export')
    balance_args.add_argument('--sweep', type=str, default='auto',
                              help='"auto" (41 quantiles) or a comma separated list of thresholds')
    balance_args.add_argument('--mc-trials', type=int, default=100000,
                              help='Monte-Carlo trials per probability in simulate')
    balance_args.add_argument('--export-theta', type=float, default=0.0,
                              help='merged-value threshold of the traditional export')
    balance_args.add_argument('--export-theta-prime', type=float, default=None,
                              help='difference threshold of the extended export, mean asymmetry if unset')

    # Stats arguments
    stats_args = parser.add_parser("stats")
    stats_args.add_argument('--structure', dest='structure_path', type=str, default=None,
                            help='structure table read by correlate')
    stats_args.add_argument('--curve-bins', type=int, default=20,
                            help='equal-width bins of the correlation curves')

    return parser


def parse_options(argv=None):
    return build_parser().parse_args(argv)
