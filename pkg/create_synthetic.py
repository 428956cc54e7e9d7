import argparse

from optk.app import get_logger
from optk.corpus import make_synthetic_corpus, write_jsonl
from optk.corpus.synthetic import DOMAIN

"""
This script writes the bundled 12-person synthetic email corpus as JSON Lines.

The corpus has a K4 core, four more triangles, a leaf whose messages are all empty, and some noise the
ingest filters must drop (an outside sender, a self-loop, a one-way pair and a duplicated message id).
Every directed pair of the network carries at least 4 messages, so run the pipeline on it with
--min-bidirectional 3 (or lower) and the domain suffix @synthetic.org:

python create_synthetic.py -o synthetic.jsonl
python run_asymmetry.py all -i synthetic.jsonl --domain-suffix @synthetic.org --min-bidirectional 3 \
    --lexicon tests/fixtures/demo_lexicon.tsv -o results_synthetic
"""


if __name__ == '__main__':
    parser = argparse.ArgumentParser(description='Write the synthetic corpus')
    parser.add_argument('-o', '--out', type=str, default='synthetic.jsonl',
                        help='output JSON Lines file')
    args = parser.parse_args()

    msgs = make_synthetic_corpus()
    path = write_jsonl(msgs, args.out)
    get_logger().log('Synthetic', f'Wrote {len(msgs)} messages of {DOMAIN} to {path}')
