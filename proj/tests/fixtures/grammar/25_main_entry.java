public class Entry {
    public static void main(String[] args) {
        int x = 1;
        assert x > 0;
    }
}
