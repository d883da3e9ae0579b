"""
Precomputes the exhaustive labeled matroid catalogs and stores them in HDF5
format, one file per ground set size.

Hierarchy of HDF5 file:

{ 'masks':   all base bitmasks, concatenated
  'offsets': num_matroids + 1 start positions into masks
  'ground':  num_matroids ground set sizes }
"""
from __future__ import print_function

import os
import sys
sys.path.append(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

import argparse
import time

import families_enum
import utils


def parse_args():
    parser = argparse.ArgumentParser()
    parser.add_argument('--n', type=str, default='1..6',
                        help='ground set sizes, e.g. <1..6>')
    parser.add_argument('--output', type=str, default='data/catalogs',
                        help='catalog directory')
    args = parser.parse_args()
    return args


if __name__ == '__main__':
    args = parse_args()
    utils.create_dir(args.output)
    for n in utils.parse_range(args.n):
        start = time.time()
        path = os.path.join(args.output, 'matroids_n%d.hdf5' % n)
        print('enumerating n = %d...' % n)
        count = families_enum.save_catalog(path, families_enum.enumerate_all_matroids(n))
        print('wrote %d matroids to %s in %s' % (count, path, utils.as_minutes(time.time() - start)))
    print('done!')
