import sys

"""
This script runs the asymmetric-opinion analysis of an email network, one stage at a time or end-to-end.

Run the whole experiment on a corpus (JSON Lines or a maildir) with:
python run_asymmetry.py all -i PATH_TO_CORPUS --domain-suffix @enron.com --lexicon PATH_TO_LEXICON -o results

- Replace PATH_TO_CORPUS with the corpus; add --format maildir for a CMU-Enron style maildir.
- Replace PATH_TO_LEXICON with a tab separated word/polarity list.
- Add --seed N to also run the Monte-Carlo check of the random baselines.
- Add --config FILE to read the options from a flat "key: value" file (flags given on the command line win).

The single stages read their inputs from the output directory unless a path is given:
python run_asymmetry.py ingest -i corpus.jsonl --domain-suffix @enron.com --out results/corpus.jsonl
python run_asymmetry.py features --corpus results/corpus.jsonl --lexicon lex.tsv --out results/features.csv
python run_asymmetry.py normalize --features results/features.csv --out results/normalized.csv
python run_asymmetry.py structure --corpus results/corpus.jsonl --out results/structure.csv
python run_asymmetry.py correlate --structure results/structure.csv --normalized results/normalized.csv --out results/report.csv
python run_asymmetry.py balance --normalized results/normalized.csv --mode extended --feature length --out curve.csv
python run_asymmetry.py export --normalized results/normalized.csv --feature length --out results/graph.dot
python run_asymmetry.py simulate --seed 7 --out results/baseline_check.csv

Exit status: 0 success, 1 malformed input or other failure, 2 missing input, 3 configuration error,
4 empty analysis domain. Artifacts are only written to files; the log goes to standard error.
"""


def main(argv=None):
    from AsymOpinions import parse_options, OpinionPipeline
    from optk.app import OpinionError, ConfigError, get_logger

    try:
        opt = parse_options(argv)
    except SystemExit as e:
        # --help / --version exit with 0, argparse usage errors are configuration errors
        return 0 if e.code in (0, None) else ConfigError.exit_code
    except OpinionError as e:
        get_logger().error('Error', e.describe())
        return e.exit_code

    try:
        pipeline = OpinionPipeline(opt)
    except OpinionError as e:
        get_logger().error('Error', e.describe())
        return e.exit_code
    return pipeline.run()


if __name__ == '__main__':
    sys.exit(main())
