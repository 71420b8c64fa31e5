class ForSparse {
    int spin(int n) {
        for (; n > 0;) {
            n = n - 2;
        }
        return n;
    }
}
