public class Fields {
    public static final int LIMIT = 100;
    private int count;
    protected double ratio = 0.5;
    static boolean ready = false;
    final long stamp = 42L;
}
