class ForFull {
    int sum(int n) {
        int total = 0;
        for (int i = 0; i < n; i = i + 1) {
            total = total + i;
        }
        return total;
    }
}
