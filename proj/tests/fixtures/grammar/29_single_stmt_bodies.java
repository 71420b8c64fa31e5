class Single {
    int condense(int n) {
        if (n > 0)
            n = n - 1;
        while (n > 10)
            n = n / 2;
        for (int i = 0; i < 3; i = i + 1)
            n = n + i;
        return n;
    }
}
