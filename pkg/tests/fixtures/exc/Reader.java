public class Reader {
    public String readOrDefault(String fallback) {
        try {
            return read();
        } catch (java.io.IOException failure) {
            return fallback;
        }
    }

    private String read() {
        return "data";
    }
}
