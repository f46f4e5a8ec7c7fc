# Report writers and global constants
